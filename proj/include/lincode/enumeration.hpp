#ifndef LINCODE_ENUMERATION_HPP
#define LINCODE_ENUMERATION_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "lincode/field.hpp"

namespace lincode {

inline constexpr std::uint64_t kCountMax = std::numeric_limits<std::uint64_t>::max();

// Binomial coefficient, saturating at kCountMax.
std::uint64_t binomial(std::size_t n, std::size_t k);

// q^e, saturating.
std::uint64_t saturating_pow(std::uint64_t q, std::size_t e);

// Number of projectively normalized nonzero vectors in GF(q)^k,
// (q^k - 1)/(q - 1), saturating.
std::uint64_t normalized_vector_count(int q, std::size_t k);

// Iterates w-subsets of {0..k-1} in lexicographic order, starting from the
// subset of the given rank. positions() is ascending.
class CombinationIterator {
public:
    CombinationIterator(std::size_t k, std::size_t w, std::uint64_t rank);
    const std::vector<std::size_t>& positions() const { return pos_; }
    bool next();  // false once the last combination has been passed

private:
    std::size_t k_, w_;
    std::vector<std::size_t> pos_;
};

// Iterates normalized vectors of GF(q)^k in ascending lexicographic order
// (leftmost coordinate most significant), starting at the given rank. The
// sequence has normalized_vector_count(q, k) entries: first-nonzero position
// runs from k-1 down to 0 and the coordinates right of it count up in base q.
class NormalizedVectorIterator {
public:
    NormalizedVectorIterator(int q, std::size_t k, std::uint64_t rank);
    const Vec& value() const { return v_; }
    bool next();

private:
    int q_;
    std::size_t k_;
    std::size_t lead_;  // index of the leading 1
    Vec v_;
};

}  // namespace lincode

#endif
