#ifndef LINCODE_EXTEND_HPP
#define LINCODE_EXTEND_HPP

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "lincode/code.hpp"
#include "lincode/minwt.hpp"
#include "lincode/polysolve.hpp"

namespace lincode {

// A block of m columns to append, stored column-wise (each of length k).
using ColumnBlock = std::vector<Vec>;

struct ExtensionProblem {
    GeneratorMatrix g;
    std::size_t m = 1;
    std::vector<Vec> jd;  // normalized information vectors of S_d, ascending
    std::size_t d = 0;
};

// The unique information vectors v with vG = c for the given codewords,
// normalized, sorted and deduplicated. Throws NotACodeword when re-encoding
// fails to reproduce a word.
std::vector<Vec> information_vectors(const GeneratorMatrix& g, std::span<const Vec> words);

ExtensionProblem make_extension_problem(const GeneratorMatrix& g, const MinWeightReport& report,
                                        std::size_t m);

// True iff v X != 0 (as a length-m vector) for every v in jd.
bool check_extension(const Field& f, std::span<const Vec> jd, const ColumnBlock& columns);

// Canonical form: nonzero columns normalized, columns sorted ascending.
ColumnBlock canonical_block(const Field& f, ColumnBlock columns);

// Number of canonical candidates scanned by exhaustive_extensions: multisets
// of m columns from {0} plus the normalized nonzero vectors, minus the zero
// block. Saturating.
std::uint64_t canonical_candidate_count(int q, std::size_t k, std::size_t m);

struct ExtensionSolutionSet {
    std::size_t m = 1;
    std::set<ColumnBlock> solutions;
    bool exhausted = true;  // complete set rather than an early-stopped sample
    std::uint64_t candidates_tested = 0;
};

// Scans every canonical candidate block. With find_all = false the scan stops
// at the first solution (exhausted = false then); a full scan that finds
// nothing still reports exhausted = true.
ExtensionSolutionSet exhaustive_extensions(const ExtensionProblem& p, bool find_all = true,
                                           std::size_t threads = 0);

// Solves v . x = 1 over GF(2) for all v in jd; the solution set is a coset of
// the nullspace of jd's row space, or empty if the system is inconsistent.
ExtensionSolutionSet binary_linear_extensions(const ExtensionProblem& p);

struct GroebnerOptions {
    GroebnerBudget budget;
    bool subset = true;  // build the ideal from the first min(|Jd|, 4k) vectors
    MonomialOrderKind order = MonomialOrderKind::Degrevlex;
};

struct GroebnerRunDetail {
    double seconds_equations = 0;
    double seconds_groebner = 0;
    double seconds_solutions = 0;
    std::uint64_t pair_reductions = 0;
    std::size_t basis_size = 0;
    bool constant_basis = false;  // GB = {1}
    std::size_t jd_used = 0;      // vectors that went into the ideal
};

// Solves the extension ideal; when a proper subset of Jd was used, variety
// points are filtered through check_extension against the full Jd.
ExtensionSolutionSet groebner_extensions(const ExtensionProblem& p,
                                         const GroebnerOptions& opts = {},
                                         GroebnerRunDetail* detail = nullptr);

enum class SearchMethod { Auto, Exhaustive, Linear, Groebner };

struct SearchOptions {
    SearchMethod method = SearchMethod::Auto;
    bool find_all = true;
    GroebnerBudget budget;
    std::size_t threads = 0;
};

// Routing for Auto: q = 2 and m = 1 go to the linear solver; everything else
// to the Groebner solver, falling back to the exhaustive scan if that hits
// its budget. Explicit method choices propagate their errors.
struct SearchResult {
    ExtensionSolutionSet solutions;
    SearchMethod method_used = SearchMethod::Exhaustive;
    bool fallback = false;
    GroebnerRunDetail groebner;
    double seconds_solutions = 0;
};

SearchResult search_extensions(const ExtensionProblem& p, const SearchOptions& opts = {});

enum class HillLizakVerdict { Extendable, Inapplicable };

// Extendable iff gcd(d, q) = 1 and every occurring nonzero weight is
// congruent to 0 or d mod q. Inapplicable means no verdict either way.
HillLizakVerdict hill_lizak_precheck(const std::set<std::size_t>& weights, int q, std::size_t d);

struct VerificationReport {
    std::size_t d_original = 0;
    std::size_t d_extended = 0;
    bool raised = false;
    bool exactly_plus_one = false;
};

// Independent check: recomputes both minimum distances from scratch.
VerificationReport verify_extension(const GeneratorMatrix& g, const ColumnBlock& columns,
                                    std::size_t threads = 0);

struct DoubleExtensionChain {
    Vec first_column;
    ExtensionSolutionSet second;
};

struct DoubleExtensionReport {
    std::size_t d = 0;  // of the starting code
    ExtensionSolutionSet first;
    std::vector<DoubleExtensionChain> chains;  // one entry per first-step column
    std::uint64_t total_chains = 0;            // complete [n+2,k,d+2] chains
};

DoubleExtensionReport double_extension_search(const GeneratorMatrix& g,
                                              const SearchOptions& opts = {});

}  // namespace lincode

#endif
