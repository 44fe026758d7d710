#include "lincode/enumeration.hpp"

#include <string>

namespace lincode {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > kCountMax) return kCountMax;
    }
    return std::uint64_t(r);
}

std::uint64_t saturating_pow(std::uint64_t q, std::size_t e) {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= q;
        if (r > kCountMax) return kCountMax;
    }
    return std::uint64_t(r);
}

std::uint64_t normalized_vector_count(int q, std::size_t k) {
    unsigned __int128 r = 0;
    unsigned __int128 term = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r += term;
        if (r > kCountMax) return kCountMax;
        term *= std::uint64_t(q);
    }
    return std::uint64_t(r);
}

CombinationIterator::CombinationIterator(std::size_t k, std::size_t w, std::uint64_t rank)
    : k_(k), w_(w), pos_(w) {
    // Unrank in lexicographic order: choose each position greedily.
    std::size_t start = 0;
    for (std::size_t i = 0; i < w_; ++i) {
        std::size_t c = start;
        while (true) {
            std::uint64_t block = binomial(k_ - c - 1, w_ - i - 1);
            if (rank < block) break;
            rank -= block;
            ++c;
        }
        pos_[i] = c;
        start = c + 1;
    }
}

bool CombinationIterator::next() {
    if (w_ == 0) return false;
    std::size_t i = w_;
    while (i-- > 0) {
        if (pos_[i] + (w_ - i) <= k_ - 1) {
            ++pos_[i];
            for (std::size_t j = i + 1; j < w_; ++j) pos_[j] = pos_[j - 1] + 1;
            return true;
        }
    }
    return false;
}

NormalizedVectorIterator::NormalizedVectorIterator(int q, std::size_t k, std::uint64_t rank)
    : q_(q), k_(k), v_(k, 0) {
    // Group sizes are q^0, q^1, ... as the leading position moves left.
    lead_ = k_ - 1;
    std::uint64_t group = 1;
    while (rank >= group) {
        rank -= group;
        group *= std::uint64_t(q_);
        --lead_;
    }
    v_[lead_] = 1;
    for (std::size_t j = k_; j-- > lead_ + 1;) {
        v_[j] = Elem(rank % q_);
        rank /= q_;
    }
}

bool NormalizedVectorIterator::next() {
    for (std::size_t j = k_; j-- > lead_ + 1;) {
        if (v_[j] + 1 < q_) {
            ++v_[j];
            return true;
        }
        v_[j] = 0;
    }
    if (lead_ == 0) return false;
    v_[lead_] = 0;
    --lead_;
    v_[lead_] = 1;
    return true;
}

}  // namespace lincode
