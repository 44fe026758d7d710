#ifndef LINCODE_MINWT_HPP
#define LINCODE_MINWT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lincode/code.hpp"

namespace lincode {

struct BoundState {
    std::size_t w;     // completed enumeration weight
    std::size_t d_lb;  // certified lower bound after that pass
    std::size_t d_ub;  // best weight seen so far
};

struct MinWeightReport {
    std::size_t d = 0;
    std::vector<Vec> reps;  // normalized minimum-weight codewords, ascending
    std::uint64_t count_full = 0;  // |S_d| = reps.size() * (q - 1)
    std::vector<BoundState> trace;
    std::uint64_t encodings_done = 0;
    bool direct_enumeration = false;
};

// Certified lower bound on the weight of any codeword whose information part
// has weight > w in every information set:
//   sum_j max(0, (w + 1) - (k - r_j)).
std::size_t enumeration_lower_bound(std::size_t w, std::size_t k,
                                    std::span<const std::size_t> relative_ranks);

// Predicted work for reaching the bound d: w0 is the smallest w with
// enumeration_lower_bound(w) > d (capped at k) and encodings is
// sum_{w=1..w0} mu * C(k, w) * (q - 1)^(w - 1), saturating.
struct EnumerationCost {
    std::size_t w0 = 0;
    std::uint64_t encodings = 0;
};

EnumerationCost enumeration_cost(std::size_t k, int q, std::size_t mu,
                                 std::span<const std::size_t> relative_ranks, std::size_t d);

enum class MinWeightPath { Auto, InformationSets, Direct };

// Minimum weight and all minimum-weight codewords (as normalized
// representatives, one per scalar class). With Auto the information-set
// enumeration is replaced by direct enumeration of all (q^k - 1)/(q - 1)
// normalized messages whenever the cost prediction at the initial upper bound
// n - k + 1 exceeds that number. Results are identical on both paths and for
// any worker count.
MinWeightReport minimum_weight_words(const GeneratorMatrix& g,
                                     const InformationSetCollection& coll,
                                     std::size_t threads = 0,
                                     MinWeightPath path = MinWeightPath::Auto);

// All normalized codewords of weight <= bound, ascending. Enumeration stops
// once the lower bound certifies that nothing of weight <= bound remains.
std::vector<Vec> words_of_weight_at_most(const GeneratorMatrix& g,
                                         const InformationSetCollection& coll, std::size_t bound,
                                         std::size_t threads = 0,
                                         MinWeightPath path = MinWeightPath::Auto);

}  // namespace lincode

#endif
