#include "lincode/extend.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include "lincode/enumeration.hpp"
#include "lincode/parallel.hpp"

namespace lincode {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<Vec> information_vectors(const GeneratorMatrix& g, std::span<const Vec> words) {
    const Field& f = g.field();
    SystematicForm form = systematic_on(g, {});
    std::set<Vec> out;
    for (const Vec& c : words) {
        if (c.size() != g.n())
            throw DimensionMismatch("information_vectors(): word length != n");
        Vec v(g.k(), 0);
        for (std::size_t r = 0; r < g.k(); ++r) {
            Elem u = c[form.pivots[r]];
            if (u == 0) continue;
            for (std::size_t j = 0; j < g.k(); ++j)
                v[j] = f.add(v[j], f.mul(u, form.transform[r][j]));
        }
        if (encode(g, v).coords != c)
            throw NotACodeword("information_vectors(): word is not in the code");
        out.insert(normalize_vector(f, v));
    }
    return {out.begin(), out.end()};
}

ExtensionProblem make_extension_problem(const GeneratorMatrix& g, const MinWeightReport& report,
                                        std::size_t m) {
    return ExtensionProblem{g, m, information_vectors(g, report.reps), report.d};
}

bool check_extension(const Field& f, std::span<const Vec> jd, const ColumnBlock& columns) {
    for (const Vec& v : jd) {
        bool hit = false;
        for (const Vec& col : columns) {
            Elem s = 0;
            for (std::size_t i = 0; i < v.size(); ++i) s = f.add(s, f.mul(v[i], col[i]));
            if (s != 0) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    return true;
}

ColumnBlock canonical_block(const Field& f, ColumnBlock columns) {
    for (Vec& col : columns)
        if (hamming_weight(col) != 0) col = normalize_vector(f, col);
    std::sort(columns.begin(), columns.end());
    return columns;
}

std::uint64_t canonical_candidate_count(int q, std::size_t k, std::size_t m) {
    // multisets of size m over the zero column plus N normalized columns
    std::uint64_t n_cols = normalized_vector_count(q, k);
    if (n_cols >= kCountMax - m) return kCountMax;
    std::uint64_t total = binomial(std::size_t(n_cols + m), m);
    return total == kCountMax ? total : total - 1;
}

namespace {

// Candidate columns are indexed 0..N: 0 is the zero column, t >= 1 the
// (t-1)-th normalized vector in ascending order.
Vec candidate_column(int q, std::size_t k, std::uint64_t t) {
    if (t == 0) return Vec(k, 0);
    return NormalizedVectorIterator(q, k, t - 1).value();
}

// Depth-first walk over nondecreasing index tuples; columns within a block
// are kept sorted so each multiset is visited once. Returns false to stop.
bool walk_candidates(int q, std::size_t k, std::uint64_t n_cols, std::size_t m, std::size_t level,
                     std::uint64_t min_t, ColumnBlock& block,
                     const std::function<bool(const ColumnBlock&, bool)>& leaf) {
    for (std::uint64_t t = min_t; t <= n_cols; ++t) {
        block[level] = candidate_column(q, k, t);
        if (level + 1 == m) {
            bool all_zero = t == 0;  // nondecreasing: the last index is the largest
            if (!leaf(block, all_zero)) return false;
        } else {
            if (!walk_candidates(q, k, n_cols, m, level + 1, t, block, leaf)) return false;
        }
    }
    return true;
}

}  // namespace

ExtensionSolutionSet exhaustive_extensions(const ExtensionProblem& p, bool find_all,
                                           std::size_t threads) {
    const Field& f = p.g.field();
    const std::size_t k = p.g.k();
    std::uint64_t n_cols = normalized_vector_count(f.q(), k);
    ExtensionSolutionSet out;
    out.m = p.m;

    if (p.m == 1 && find_all) {
        // Data-parallel scan over the normalized columns.
        struct Local {
            std::vector<ColumnBlock> hits;
            std::uint64_t tested = 0;
        };
        auto parts = map_chunked<Local>(
            n_cols, resolve_workers(threads), 256, [&](std::uint64_t b, std::uint64_t e) {
                Local local;
                NormalizedVectorIterator it(f.q(), k, b);
                for (std::uint64_t r = b; r < e; ++r) {
                    ColumnBlock block{it.value()};
                    ++local.tested;
                    if (check_extension(f, p.jd, block)) local.hits.push_back(std::move(block));
                    it.next();
                }
                return local;
            });
        for (auto& part : parts) {
            out.candidates_tested += part.tested;
            for (auto& hit : part.hits) out.solutions.insert(std::move(hit));
        }
        out.exhausted = true;
        return out;
    }

    ColumnBlock block(p.m);
    bool stopped = false;
    walk_candidates(f.q(), k, n_cols, p.m, 0, 0, block,
                    [&](const ColumnBlock& candidate, bool all_zero) {
                        if (all_zero) return true;
                        ++out.candidates_tested;
                        if (check_extension(f, p.jd, candidate)) {
                            out.solutions.insert(candidate);
                            if (!find_all) {
                                stopped = true;
                                return false;
                            }
                        }
                        return true;
                    });
    out.exhausted = !stopped;
    return out;
}

ExtensionSolutionSet binary_linear_extensions(const ExtensionProblem& p) {
    const Field& f = p.g.field();
    if (f.q() != 2)
        throw WrongField("binary_linear_extensions(): the linear method requires GF(2)");
    if (p.m != 1)
        throw DimensionMismatch("binary_linear_extensions(): only single columns are supported");
    const std::size_t k = p.g.k();

    // Row-reduce the augmented system (v | 1); the reduced rows are a spanning
    // subset of Jd's constraints.
    std::vector<Vec> rows;
    rows.reserve(p.jd.size());
    for (const Vec& v : p.jd) {
        Vec row = v;
        row.push_back(1);
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < rows.size(); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            for (std::size_t j = 0; j <= k; ++j) rows[i][j] = f.sub(rows[i][j], rows[r][j]);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    ExtensionSolutionSet out;
    out.m = 1;
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][k] != 0) return out;  // 0 = 1: inconsistent

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < k; ++c)
        if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end())
            free_cols.push_back(c);

    std::uint64_t assignments = saturating_pow(2, free_cols.size());
    for (std::uint64_t a = 0; a < assignments; ++a) {
        Vec x(k, 0);
        for (std::size_t t = 0; t < free_cols.size(); ++t)
            x[free_cols[t]] = Elem((a >> (free_cols.size() - 1 - t)) & 1);
        for (std::size_t t = 0; t < pivot_cols.size(); ++t) {
            Elem s = rows[t][k];
            for (std::size_t c : free_cols) s = f.sub(s, f.mul(rows[t][c], x[c]));
            x[pivot_cols[t]] = s;
        }
        if (hamming_weight(x) == 0) continue;  // the zero column is never a valid extension
        out.solutions.insert(ColumnBlock{std::move(x)});
    }
    return out;
}

ExtensionSolutionSet groebner_extensions(const ExtensionProblem& p, const GroebnerOptions& opts,
                                         GroebnerRunDetail* detail) {
    const Field& f = p.g.field();
    const std::size_t k = p.g.k();
    GroebnerRunDetail local;
    GroebnerRunDetail& info = detail ? *detail : local;

    std::vector<Vec> subset = p.jd;
    bool proper = false;
    if (opts.subset) {
        std::size_t cap = std::max<std::size_t>(4 * k, 1);
        if (subset.size() > cap) {
            subset.resize(cap);
            proper = true;
        }
    }
    info.jd_used = subset.size();

    auto t0 = std::chrono::steady_clock::now();
    Ideal ideal = build_extension_ideal(f, subset, k, p.m, opts.order);
    info.seconds_equations = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    GroebnerResult gb = buchberger(ideal, opts.budget);
    info.seconds_groebner = seconds_since(t0);
    info.pair_reductions = gb.pair_reductions;
    info.basis_size = gb.basis.size();
    info.constant_basis = gb.contains_nonzero_constant();

    t0 = std::chrono::steady_clock::now();
    ExtensionSolutionSet out;
    out.m = p.m;
    if (!info.constant_basis) {
        for (const Vec& point : variety(gb.basis, ideal.ring)) {
            ColumnBlock block(p.m);
            for (std::size_t j = 0; j < p.m; ++j)
                block[j] = Vec(point.begin() + j * k, point.begin() + (j + 1) * k);
            bool all_zero = true;
            for (const Vec& col : block)
                if (hamming_weight(col) != 0) all_zero = false;
            if (all_zero) continue;
            ColumnBlock canon = canonical_block(f, std::move(block));
            if (proper && !check_extension(f, p.jd, canon)) continue;
            out.solutions.insert(std::move(canon));
        }
    }
    info.seconds_solutions = seconds_since(t0);
    return out;
}

SearchResult search_extensions(const ExtensionProblem& p, const SearchOptions& opts) {
    SearchResult res;
    auto run_exhaustive = [&]() {
        auto t0 = std::chrono::steady_clock::now();
        res.solutions = exhaustive_extensions(p, opts.find_all, opts.threads);
        res.seconds_solutions = seconds_since(t0);
        res.method_used = SearchMethod::Exhaustive;
    };
    auto run_linear = [&]() {
        auto t0 = std::chrono::steady_clock::now();
        res.solutions = binary_linear_extensions(p);
        res.seconds_solutions = seconds_since(t0);
        res.method_used = SearchMethod::Linear;
    };
    auto run_groebner = [&]() {
        GroebnerOptions gopts;
        gopts.budget = opts.budget;
        res.solutions = groebner_extensions(p, gopts, &res.groebner);
        res.seconds_solutions = res.groebner.seconds_solutions;
        res.method_used = SearchMethod::Groebner;
    };
    switch (opts.method) {
        case SearchMethod::Exhaustive:
            run_exhaustive();
            break;
        case SearchMethod::Linear:
            run_linear();
            break;
        case SearchMethod::Groebner:
            run_groebner();
            break;
        case SearchMethod::Auto:
            if (p.g.field().q() == 2 && p.m == 1 && !p.jd.empty()) {
                run_linear();
            } else if (p.jd.empty()) {
                run_exhaustive();
            } else {
                try {
                    run_groebner();
                } catch (const ResourceLimit&) {
                    res.fallback = true;
                    run_exhaustive();
                }
            }
            break;
    }
    return res;
}

HillLizakVerdict hill_lizak_precheck(const std::set<std::size_t>& weights, int q, std::size_t d) {
    if (std::gcd(d, std::size_t(q)) != 1) return HillLizakVerdict::Inapplicable;
    for (std::size_t w : weights) {
        std::size_t r = w % std::size_t(q);
        if (r != 0 && r != d % std::size_t(q)) return HillLizakVerdict::Inapplicable;
    }
    return HillLizakVerdict::Extendable;
}

VerificationReport verify_extension(const GeneratorMatrix& g, const ColumnBlock& columns,
                                    std::size_t threads) {
    auto coll = build_information_set_collection(g);
    MinWeightReport before = minimum_weight_words(g, coll, threads);
    GeneratorMatrix ext = append_columns(g, columns);
    auto coll_ext = build_information_set_collection(ext);
    MinWeightReport after = minimum_weight_words(ext, coll_ext, threads);
    VerificationReport rep;
    rep.d_original = before.d;
    rep.d_extended = after.d;
    rep.raised = after.d >= before.d + 1;
    rep.exactly_plus_one = after.d == before.d + 1;
    return rep;
}

DoubleExtensionReport double_extension_search(const GeneratorMatrix& g,
                                              const SearchOptions& opts) {
    auto coll = build_information_set_collection(g);
    MinWeightReport mw = minimum_weight_words(g, coll, opts.threads);
    ExtensionProblem p = make_extension_problem(g, mw, 1);
    SearchOptions step = opts;
    step.method = opts.method;
    step.find_all = true;

    DoubleExtensionReport rep;
    rep.d = mw.d;
    rep.first = search_extensions(p, step).solutions;
    for (const ColumnBlock& sol : rep.first.solutions) {
        DoubleExtensionChain chain{sol.front(), {}};
        GeneratorMatrix ext = append_columns(g, sol);
        auto coll_ext = build_information_set_collection(ext);
        MinWeightReport mw_ext = minimum_weight_words(ext, coll_ext, opts.threads);
        if (mw_ext.d == mw.d + 1) {
            ExtensionProblem p2 = make_extension_problem(ext, mw_ext, 1);
            chain.second = search_extensions(p2, step).solutions;
        }
        rep.total_chains += chain.second.solutions.size();
        rep.chains.push_back(std::move(chain));
    }
    return rep;
}

}  // namespace lincode
