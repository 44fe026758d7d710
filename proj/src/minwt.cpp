#include "lincode/minwt.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "lincode/enumeration.hpp"
#include "lincode/parallel.hpp"

namespace lincode {

namespace {

constexpr std::uint64_t kMinChunk = 1024;  // supports per worker chunk

std::uint64_t pass_size(std::size_t k, std::size_t w, int q) {
    std::uint64_t combos = binomial(k, w);
    std::uint64_t patterns = saturating_pow(std::uint64_t(q - 1), w - 1);
    if (combos != 0 && patterns > kCountMax / combos) return kCountMax;
    return combos * patterns;
}

// One enumeration pass: messages of weight w supported on the combinations in
// rank range [begin, end), all nonzero value patterns with the first support
// coordinate fixed to 1. Collects the minimum weight seen and the normalized
// codewords attaining it.
struct PassResult {
    std::size_t min_weight = std::numeric_limits<std::size_t>::max();
    std::vector<Vec> words;
    std::uint64_t encodings = 0;
};

template <typename Visit>
void enumerate_pass(const GeneratorMatrix& g, std::size_t w, std::uint64_t begin,
                    std::uint64_t end, Visit&& visit) {
    const Field& f = g.field();
    const int q = f.q();
    const std::size_t n = g.n();
    CombinationIterator support(g.k(), w, begin);
    std::vector<Elem> values(w);
    Vec c(n);
    for (std::uint64_t r = begin; r < end; ++r) {
        const auto& pos = support.positions();
        std::fill(values.begin(), values.end(), Elem(1));
        while (true) {
            std::fill(c.begin(), c.end(), Elem(0));
            for (std::size_t t = 0; t < w; ++t) {
                const Vec& row = g.row(pos[t]);
                Elem v = values[t];
                for (std::size_t j = 0; j < n; ++j) c[j] = f.add(c[j], f.mul(v, row[j]));
            }
            visit(c);
            // advance the value pattern; values[0] stays 1
            std::size_t t = w;
            bool carried = true;
            while (t-- > 1) {
                if (values[t] + 1 < q) {
                    ++values[t];
                    carried = false;
                    break;
                }
                values[t] = 1;
            }
            if (w <= 1 || carried) break;
        }
        support.next();
    }
}

PassResult run_pass(const GeneratorMatrix& g, std::size_t w, std::uint64_t begin,
                    std::uint64_t end) {
    PassResult res;
    const Field& f = g.field();
    enumerate_pass(g, w, begin, end, [&](const Vec& c) {
        ++res.encodings;
        std::size_t wt = hamming_weight(c);
        if (wt < res.min_weight) {
            res.min_weight = wt;
            res.words.clear();
        }
        if (wt == res.min_weight) res.words.push_back(normalize_vector(f, c));
    });
    return res;
}

PassResult run_pass_parallel(const GeneratorMatrix& g, std::size_t w, std::size_t workers) {
    std::uint64_t combos = binomial(g.k(), w);
    std::uint64_t patterns = saturating_pow(std::uint64_t(g.field().q() - 1), w - 1);
    std::uint64_t min_chunk = std::max<std::uint64_t>(1, kMinChunk / std::max<std::uint64_t>(patterns, 1));
    auto parts = map_chunked<PassResult>(combos, workers, min_chunk,
                                         [&](std::uint64_t b, std::uint64_t e) {
                                             return run_pass(g, w, b, e);
                                         });
    PassResult merged;
    for (auto& p : parts) {
        merged.encodings += p.encodings;
        if (p.min_weight < merged.min_weight) {
            merged.min_weight = p.min_weight;
            merged.words.clear();
        }
        if (p.min_weight == merged.min_weight)
            merged.words.insert(merged.words.end(), p.words.begin(), p.words.end());
    }
    return merged;
}

// Direct path: scan every normalized message once.
MinWeightReport direct_minimum(const GeneratorMatrix& g) {
    MinWeightReport rep;
    rep.direct_enumeration = true;
    const Field& f = g.field();
    std::uint64_t total = normalized_vector_count(f.q(), g.k());
    std::set<Vec> reps;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    NormalizedVectorIterator it(f.q(), g.k(), 0);
    for (std::uint64_t r = 0; r < total; ++r) {
        Codeword c = encode(g, it.value());
        ++rep.encodings_done;
        if (c.weight < best) {
            best = c.weight;
            reps.clear();
        }
        if (c.weight == best) reps.insert(normalize_vector(f, c.coords));
        it.next();
    }
    rep.d = best;
    rep.reps.assign(reps.begin(), reps.end());
    rep.count_full = std::uint64_t(rep.reps.size()) * (f.q() - 1);
    rep.trace.push_back(BoundState{g.k(), best, best});
    return rep;
}

bool use_direct_path(const GeneratorMatrix& g, const InformationSetCollection& coll,
                     std::size_t target, MinWeightPath path) {
    if (path == MinWeightPath::InformationSets) return false;
    if (path == MinWeightPath::Direct) return true;
    EnumerationCost cost =
        enumeration_cost(g.k(), g.field().q(), coll.mu(), coll.relative_ranks(), target);
    return cost.encodings > normalized_vector_count(g.field().q(), g.k());
}

}  // namespace

std::size_t enumeration_lower_bound(std::size_t w, std::size_t k,
                                    std::span<const std::size_t> relative_ranks) {
    std::size_t bound = 0;
    for (std::size_t r : relative_ranks) {
        std::size_t covered = k - r;  // coordinates already seen in earlier sets
        if (w + 1 > covered) bound += w + 1 - covered;
    }
    return bound;
}

EnumerationCost enumeration_cost(std::size_t k, int q, std::size_t mu,
                                 std::span<const std::size_t> relative_ranks, std::size_t d) {
    EnumerationCost cost;
    std::size_t w = 1;
    while (w <= k) {
        std::uint64_t size = pass_size(k, w, q);
        std::uint64_t step = (mu != 0 && size > kCountMax / mu) ? kCountMax : size * mu;
        cost.encodings =
            (cost.encodings > kCountMax - step) ? kCountMax : cost.encodings + step;
        cost.w0 = w;
        if (enumeration_lower_bound(w, k, relative_ranks) > d) break;
        ++w;
    }
    return cost;
}

MinWeightReport minimum_weight_words(const GeneratorMatrix& g,
                                     const InformationSetCollection& coll, std::size_t threads,
                                     MinWeightPath path) {
    std::size_t d_ub = g.n() - g.k() + 1;
    if (use_direct_path(g, coll, d_ub, path)) return direct_minimum(g);

    std::size_t workers = resolve_workers(threads);
    auto ranks = coll.relative_ranks();
    MinWeightReport rep;
    std::set<Vec> reps;
    std::size_t d_lb = 1;
    std::size_t w = 1;
    while (w <= g.k() && d_lb <= d_ub) {
        for (const InformationSet& entry : coll.entries) {
            PassResult pass = run_pass_parallel(entry.matrix, w, workers);
            rep.encodings_done += pass.encodings;
            if (pass.min_weight < d_ub) {
                d_ub = pass.min_weight;
                reps.clear();
            }
            if (pass.min_weight == d_ub) reps.insert(pass.words.begin(), pass.words.end());
        }
        d_lb = enumeration_lower_bound(w, g.k(), ranks);
        rep.trace.push_back(BoundState{w, d_lb, d_ub});
        ++w;
    }
    rep.d = d_ub;
    rep.reps.assign(reps.begin(), reps.end());
    rep.count_full = std::uint64_t(rep.reps.size()) * (g.field().q() - 1);
    return rep;
}

std::vector<Vec> words_of_weight_at_most(const GeneratorMatrix& g,
                                         const InformationSetCollection& coll, std::size_t bound,
                                         std::size_t threads, MinWeightPath path) {
    const Field& f = g.field();
    std::set<Vec> found;
    if (use_direct_path(g, coll, bound, path)) {
        std::uint64_t total = normalized_vector_count(f.q(), g.k());
        NormalizedVectorIterator it(f.q(), g.k(), 0);
        for (std::uint64_t r = 0; r < total; ++r) {
            Codeword c = encode(g, it.value());
            if (c.weight <= bound) found.insert(normalize_vector(f, c.coords));
            it.next();
        }
        return {found.begin(), found.end()};
    }

    std::size_t workers = resolve_workers(threads);
    auto ranks = coll.relative_ranks();
    std::size_t w = 1;
    while (w <= g.k()) {
        for (const InformationSet& entry : coll.entries) {
            std::uint64_t combos = binomial(g.k(), w);
            auto parts = map_chunked<std::vector<Vec>>(
                combos, workers, 64, [&](std::uint64_t b, std::uint64_t e) {
                    std::vector<Vec> hits;
                    enumerate_pass(entry.matrix, w, b, e, [&](const Vec& c) {
                        if (hamming_weight(c) <= bound) hits.push_back(normalize_vector(f, c));
                    });
                    return hits;
                });
            for (auto& part : parts) found.insert(part.begin(), part.end());
        }
        if (enumeration_lower_bound(w, g.k(), ranks) > bound) break;
        ++w;
    }
    return {found.begin(), found.end()};
}

}  // namespace lincode
