#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "lincode/enumeration.hpp"
#include "lincode/extend.hpp"
#include "oracles.hpp"

using namespace lincode;
using oracles::gm;
using oracles::vec;

namespace {

GeneratorMatrix hamming74() {
    return gm(make_field(2), {{1, 0, 0, 0, 1, 1, 0},
                              {0, 1, 0, 0, 1, 0, 1},
                              {0, 0, 1, 0, 0, 1, 1},
                              {0, 0, 0, 1, 1, 1, 1}});
}

GeneratorMatrix tetracode() { return gm(make_field(3), {{1, 0, 1, 1}, {0, 1, 1, 2}}); }

GeneratorMatrix ternary322() { return gm(make_field(3), {{1, 0, 1}, {0, 1, 1}}); }

ExtensionProblem problem_for(const GeneratorMatrix& g, std::size_t m = 1) {
    auto coll = build_information_set_collection(g);
    return make_extension_problem(g, minimum_weight_words(g, coll), m);
}

// Solutions recomputed the long way: filter every canonical block through an
// oracle-side admissibility check on the full codeword list.
std::set<ColumnBlock> brute_solutions(const GeneratorMatrix& g, std::size_t m) {
    const Field& f = g.field();
    auto brute = oracles::brute_min_weight(g);
    std::set<ColumnBlock> out;
    Vec flat(g.k() * m, 0);
    while (oracles::advance(flat, f.q())) {
        ColumnBlock cols(m);
        for (std::size_t j = 0; j < m; ++j)
            cols[j] = Vec(flat.begin() + j * g.k(), flat.begin() + (j + 1) * g.k());
        // the extended minimum distance must clear d+1
        bool ok = true;
        Vec v(g.k(), 0);
        while (oracles::advance(v, f.q())) {
            Vec c(g.n(), 0);
            for (std::size_t r = 0; r < g.k(); ++r)
                for (std::size_t j = 0; j < g.n(); ++j)
                    c[j] = f.add(c[j], f.mul(v[r], g.rows()[r][j]));
            std::size_t w = hamming_weight(c);
            for (const Vec& col : cols) {
                Elem s = 0;
                for (std::size_t i = 0; i < g.k(); ++i) s = f.add(s, f.mul(v[i], col[i]));
                if (s != 0) ++w;
            }
            if (w < brute.d + 1) {
                ok = false;
                break;
            }
        }
        if (ok) out.insert(canonical_block(f, cols));
    }
    return out;
}

}  // namespace

TEST_CASE("information vectors recover normalized messages") {
    GeneratorMatrix g = ternary322();
    auto coll = build_information_set_collection(g);
    MinWeightReport mw = minimum_weight_words(g, coll);
    auto jd = information_vectors(g, mw.reps);
    std::vector<Vec> expected{vec({0, 1}), vec({1, 0}), vec({1, 2})};
    CHECK(jd == expected);
    CHECK_THROWS_AS(information_vectors(g, std::vector<Vec>{vec({1, 1, 1})}), NotACodeword);
    CHECK_THROWS_AS(information_vectors(g, std::vector<Vec>{vec({1, 1})}), DimensionMismatch);

    GeneratorMatrix h = hamming74();
    auto hcoll = build_information_set_collection(h);
    auto hjd = information_vectors(h, minimum_weight_words(h, hcoll).reps);
    CHECK(hjd.size() == 7);
}

TEST_CASE("check_extension is a dot product test") {
    Field f3 = make_field(3);
    ExtensionProblem p = problem_for(ternary322());
    CHECK(check_extension(f3, p.jd, {vec({1, 2})}));
    CHECK_FALSE(check_extension(f3, p.jd, {vec({1, 1})}));  // (1,2).(1,1) = 0
    CHECK_FALSE(check_extension(f3, p.jd, {vec({0, 0})}));
    // a second column can cover what the first misses
    CHECK(check_extension(f3, p.jd, {vec({1, 1}), vec({0, 1})}));
}

TEST_CASE("canonical_block normalizes and sorts") {
    Field f3 = make_field(3);
    CHECK(canonical_block(f3, {vec({2, 1})}) == ColumnBlock{vec({1, 2})});
    CHECK(canonical_block(f3, {vec({1, 2}), vec({0, 2})}) ==
          ColumnBlock{vec({0, 1}), vec({1, 2})});
    CHECK(canonical_block(f3, {vec({2, 2}), vec({0, 0})}) ==
          ColumnBlock{vec({0, 0}), vec({1, 1})});
}

TEST_CASE("canonical candidate counts") {
    CHECK(canonical_candidate_count(2, 2, 1) == 3);
    CHECK(canonical_candidate_count(2, 2, 2) == 9);
    CHECK(canonical_candidate_count(3, 1, 2) == 2);
    CHECK(canonical_candidate_count(3, 2, 1) == 4);
    CHECK(canonical_candidate_count(2, 4, 1) == 15);
    // matches explicit orbit counting
    std::vector<std::tuple<int, std::size_t, std::size_t>> grid;
    for (int q : {2, 3})
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t m = 1; m <= 2; ++m) grid.emplace_back(q, k, m);
    for (auto [q, k, m] : grid)
        CHECK(canonical_candidate_count(q, k, m) == oracles::brute_orbit_count(make_field(q), k, m));
}

TEST_CASE("exhaustive search on the named codes") {
    SUBCASE("Hamming code has exactly the parity column") {
        ExtensionProblem p = problem_for(hamming74());
        ExtensionSolutionSet s = exhaustive_extensions(p);
        CHECK(s.exhausted);
        CHECK(s.candidates_tested == 15);
        REQUIRE(s.solutions.size() == 1);
        CHECK(*s.solutions.begin() == ColumnBlock{vec({1, 1, 1, 0})});
    }

    SUBCASE("tetracode does not extend") {
        ExtensionProblem p = problem_for(tetracode());
        ExtensionSolutionSet s = exhaustive_extensions(p);
        CHECK(s.exhausted);
        CHECK(s.candidates_tested == 4);
        CHECK(s.solutions.empty());
    }

    SUBCASE("ternary [3,2,2] extends uniquely to the tetracode") {
        ExtensionProblem p = problem_for(ternary322());
        ExtensionSolutionSet s = exhaustive_extensions(p);
        REQUIRE(s.solutions.size() == 1);
        CHECK(*s.solutions.begin() == ColumnBlock{vec({1, 2})});
        GeneratorMatrix ext = append_columns(ternary322(), *s.solutions.begin());
        CHECK(ext == tetracode());
    }

    SUBCASE("find_all = false stops at the first hit") {
        ExtensionProblem p = problem_for(hamming74());
        ExtensionSolutionSet s = exhaustive_extensions(p, false);
        CHECK(s.solutions.size() == 1);
        CHECK_FALSE(s.exhausted);
        CHECK(s.candidates_tested <= 15);
    }

    SUBCASE("two columns") {
        ExtensionProblem p = problem_for(ternary322(), 2);
        ExtensionSolutionSet s = exhaustive_extensions(p);
        CHECK(s.exhausted);
        CHECK(s.candidates_tested == canonical_candidate_count(3, 2, 2));
        CHECK(s.solutions == brute_solutions(ternary322(), 2));
        for (const ColumnBlock& b : s.solutions) CHECK(b.size() == 2);
    }
}

TEST_CASE("exhaustive search equals the oracle on random codes") {
    std::mt19937_64 rng(5501);
    for (int q : {2, 3, 4}) {
        Field f = make_field(q);
        for (int trial = 0; trial < 5; ++trial) {
            std::size_t k = 2 + trial % 2;
            std::size_t n = k + 2 + trial;
            GeneratorMatrix g = oracles::random_code(rng, f, k, n);
            for (std::size_t m = 1; m <= 2; ++m) {
                ExtensionProblem p = problem_for(g, m);
                ExtensionSolutionSet s = exhaustive_extensions(p);
                CHECK(s.exhausted);
                CHECK(s.candidates_tested == canonical_candidate_count(q, k, m));
                CHECK(s.solutions == brute_solutions(g, m));
            }
        }
    }
}

TEST_CASE("worker count never changes the exhaustive result") {
    ExtensionProblem p = problem_for(hamming74());
    ExtensionSolutionSet serial = exhaustive_extensions(p, true, 1);
    ExtensionSolutionSet wide = exhaustive_extensions(p, true, 8);
    CHECK(serial.solutions == wide.solutions);
    CHECK(serial.candidates_tested == wide.candidates_tested);
}

TEST_CASE("binary linear solver") {
    SUBCASE("Hamming system has one solution") {
        ExtensionProblem p = problem_for(hamming74());
        ExtensionSolutionSet s = binary_linear_extensions(p);
        REQUIRE(s.solutions.size() == 1);
        CHECK(*s.solutions.begin() == ColumnBlock{vec({1, 1, 1, 0})});
        CHECK(s.exhausted);
    }

    SUBCASE("inconsistent system yields the empty set") {
        GeneratorMatrix g = gm(make_field(2), {{1, 1, 0}, {0, 1, 1}});
        ExtensionProblem p = problem_for(g);
        ExtensionSolutionSet s = binary_linear_extensions(p);
        CHECK(s.solutions.empty());
        CHECK(s.exhausted);
    }

    SUBCASE("free variables enumerate a coset") {
        // d = 1 with a single minimum word: one equation, 2^(k-1) solutions
        GeneratorMatrix g = gm(make_field(2), {{1, 0, 0}, {0, 1, 1}});
        ExtensionProblem p = problem_for(g);
        REQUIRE(p.jd == std::vector<Vec>{vec({1, 0})});
        ExtensionSolutionSet s = binary_linear_extensions(p);
        CHECK(s.solutions.size() == 2);  // (1,0) and (1,1)
        CHECK(s.solutions.count(ColumnBlock{vec({1, 0})}) == 1);
        CHECK(s.solutions.count(ColumnBlock{vec({1, 1})}) == 1);
    }

    SUBCASE("rejects the wrong field or shape") {
        CHECK_THROWS_AS(binary_linear_extensions(problem_for(ternary322())), WrongField);
        ExtensionProblem two = problem_for(hamming74(), 2);
        CHECK_THROWS_AS(binary_linear_extensions(two), DimensionMismatch);
    }

    SUBCASE("agrees with exhaustive search on random binary codes") {
        std::mt19937_64 rng(5601);
        Field f2 = make_field(2);
        for (int trial = 0; trial < 20; ++trial) {
            GeneratorMatrix g = oracles::random_code(rng, f2, 3 + trial % 3, 8 + trial % 5);
            ExtensionProblem p = problem_for(g);
            CHECK(binary_linear_extensions(p).solutions == exhaustive_extensions(p).solutions);
        }
    }
}

TEST_CASE("groebner solver matches exhaustive search") {
    SUBCASE("named codes") {
        for (const GeneratorMatrix& g : {hamming74(), ternary322()}) {
            ExtensionProblem p = problem_for(g);
            GroebnerRunDetail detail;
            ExtensionSolutionSet s = groebner_extensions(p, {}, &detail);
            CHECK(s.solutions == exhaustive_extensions(p).solutions);
            CHECK_FALSE(detail.constant_basis);
            CHECK(detail.jd_used == p.jd.size());
        }
        ExtensionProblem t = problem_for(tetracode());
        GroebnerRunDetail detail;
        ExtensionSolutionSet s = groebner_extensions(t, {}, &detail);
        CHECK(s.solutions.empty());
        CHECK(detail.constant_basis);
        CHECK(detail.basis_size == 1);
    }

    SUBCASE("random codes, one and two columns") {
        std::mt19937_64 rng(5701);
        for (int q : {2, 3}) {
            Field f = make_field(q);
            for (int trial = 0; trial < 6; ++trial) {
                GeneratorMatrix g = oracles::random_code(rng, f, 2 + trial % 2, 5 + trial);
                for (std::size_t m = 1; m <= 2; ++m) {
                    ExtensionProblem p = problem_for(g, m);
                    CHECK(groebner_extensions(p).solutions == exhaustive_extensions(p).solutions);
                }
            }
        }
    }

    SUBCASE("lex order gives the same solution set") {
        ExtensionProblem p = problem_for(ternary322());
        GroebnerOptions lex;
        lex.order = MonomialOrderKind::Lex;
        CHECK(groebner_extensions(p, lex).solutions == exhaustive_extensions(p).solutions);
    }

    SUBCASE("proper subset is filtered against the full Jd") {
        // |Jd| = 10 > 4k = 8 forces a subset; filtering must remove the
        // spurious subset-only solutions
        Field f9 = make_field(9);
        std::vector<Vec> jd;
        NormalizedVectorIterator it(9, 2, 0);
        for (int i = 0; i < 10; ++i) {
            jd.push_back(it.value());
            it.next();
        }
        GeneratorMatrix g = gm(f9, {{1, 0}, {0, 1}});
        ExtensionProblem p{g, 1, jd, 1};

        GroebnerOptions with_subset;
        GroebnerRunDetail detail;
        ExtensionSolutionSet subset = groebner_extensions(p, with_subset, &detail);
        CHECK(detail.jd_used == 8);

        GroebnerOptions full;
        full.subset = false;
        GroebnerRunDetail fdetail;
        ExtensionSolutionSet whole = groebner_extensions(p, full, &fdetail);
        CHECK(fdetail.jd_used == 10);

        ExtensionSolutionSet ex = exhaustive_extensions(p);
        CHECK(subset.solutions == ex.solutions);
        CHECK(whole.solutions == ex.solutions);
        CHECK(ex.solutions.empty());  // every column is orthogonal to some jd vector
    }
}

TEST_CASE("search_extensions routes by field and width") {
    SUBCASE("binary single column goes linear") {
        SearchResult r = search_extensions(problem_for(hamming74()));
        CHECK(r.method_used == SearchMethod::Linear);
        CHECK_FALSE(r.fallback);
        CHECK(r.solutions.solutions.size() == 1);
    }

    SUBCASE("everything else goes groebner") {
        SearchResult r = search_extensions(problem_for(ternary322()));
        CHECK(r.method_used == SearchMethod::Groebner);
        CHECK(r.solutions.solutions.size() == 1);
        SearchResult two = search_extensions(problem_for(hamming74(), 2));
        CHECK(two.method_used == SearchMethod::Groebner);
    }

    SUBCASE("budget exhaustion falls back to the exhaustive scan") {
        SearchOptions opts;
        opts.budget.pair_reductions = 0;
        opts.budget.max_terms = 1;
        SearchResult r = search_extensions(problem_for(ternary322()), opts);
        CHECK(r.fallback);
        CHECK(r.method_used == SearchMethod::Exhaustive);
        CHECK(r.solutions.solutions.size() == 1);

        opts.method = SearchMethod::Groebner;
        CHECK_THROWS_AS(search_extensions(problem_for(ternary322()), opts), ResourceLimit);
    }

    SUBCASE("explicit methods are honored") {
        SearchOptions opts;
        opts.method = SearchMethod::Exhaustive;
        CHECK(search_extensions(problem_for(hamming74()), opts).method_used ==
              SearchMethod::Exhaustive);
        opts.method = SearchMethod::Linear;
        CHECK_THROWS_AS(search_extensions(problem_for(ternary322()), opts), WrongField);
    }
}

TEST_CASE("solution sets are invariant under column permutation and scaling") {
    std::mt19937_64 rng(5808);
    for (int q : {2, 3, 4}) {
        Field f = make_field(q);
        for (int trial = 0; trial < 6; ++trial) {
            GeneratorMatrix g = oracles::random_code(rng, f, 3, 7 + trial % 4);
            std::vector<std::size_t> perm(g.n());
            std::iota(perm.begin(), perm.end(), std::size_t(0));
            std::shuffle(perm.begin(), perm.end(), rng);
            std::uniform_int_distribution<int> scale(1, q - 1);
            std::vector<Vec> rows(g.k(), Vec(g.n()));
            for (std::size_t j = 0; j < g.n(); ++j) {
                Elem s = Elem(scale(rng));
                for (std::size_t i = 0; i < g.k(); ++i)
                    rows[i][j] = f.mul(s, g.rows()[i][perm[j]]);
            }
            GeneratorMatrix shuffled(f, g.k(), g.n(), rows);
            CHECK(search_extensions(problem_for(g)).solutions.solutions ==
                  search_extensions(problem_for(shuffled)).solutions.solutions);
        }
    }
}

TEST_CASE("hill_lizak_precheck") {
    using HL = HillLizakVerdict;
    CHECK(hill_lizak_precheck({3, 4, 7}, 2, 3) == HL::Extendable);
    CHECK(hill_lizak_precheck({3}, 3, 3) == HL::Inapplicable);        // gcd(d, q) = 3
    CHECK(hill_lizak_precheck({2, 4}, 2, 2) == HL::Inapplicable);     // gcd(d, q) = 2
    CHECK(hill_lizak_precheck({2, 3}, 3, 2) == HL::Extendable);       // 2 = d, 3 = 0 (mod 3)
    CHECK(hill_lizak_precheck({1, 2}, 3, 1) == HL::Inapplicable);     // 2 is neither 0 nor 1
    CHECK(hill_lizak_precheck({5, 6, 9}, 3, 5) == HL::Extendable);    // 5 = 2 = d, 6 = 9 = 0
    CHECK(hill_lizak_precheck({5, 7}, 3, 5) == HL::Inapplicable);     // 7 = 1 (mod 3)

    // one-directional: the ternary identity extends although the precheck
    // is inapplicable
    GeneratorMatrix g = gm(make_field(3), {{1, 0}, {0, 1}});
    auto weights = oracles::brute_weights(g);
    CHECK(hill_lizak_precheck(weights, 3, 1) == HL::Inapplicable);
    CHECK_FALSE(exhaustive_extensions(problem_for(g)).solutions.empty());
}

TEST_CASE("verify_extension recomputes both distances") {
    GeneratorMatrix g = hamming74();
    VerificationReport good = verify_extension(g, {vec({1, 1, 1, 0})});
    CHECK(good.d_original == 3);
    CHECK(good.d_extended == 4);
    CHECK(good.raised);
    CHECK(good.exactly_plus_one);

    VerificationReport zero = verify_extension(g, {vec({0, 0, 0, 0})});
    CHECK(zero.d_extended == 3);
    CHECK_FALSE(zero.raised);

    VerificationReport wrong = verify_extension(g, {vec({1, 0, 0, 0})});
    CHECK_FALSE(wrong.raised);

    // two-column jump: [3,1,3] + two columns of ones reaches d = 5
    GeneratorMatrix rep = gm(make_field(2), {{1, 1, 1}});
    VerificationReport twice = verify_extension(rep, {vec({1}), vec({1})});
    CHECK(twice.d_extended == 5);
    CHECK(twice.raised);
    CHECK_FALSE(twice.exactly_plus_one);
}

TEST_CASE("double extension chains") {
    SUBCASE("repetition code chains twice") {
        GeneratorMatrix g = gm(make_field(2), {{1, 1, 1}});
        DoubleExtensionReport rep = double_extension_search(g);
        CHECK(rep.d == 3);
        REQUIRE(rep.first.solutions.size() == 1);
        REQUIRE(rep.chains.size() == 1);
        CHECK(rep.chains[0].first_column == vec({1}));
        CHECK(rep.chains[0].second.solutions.size() == 1);
        CHECK(rep.total_chains == 1);
    }

    SUBCASE("ternary [3,2,2] stops after one step") {
        DoubleExtensionReport rep = double_extension_search(ternary322());
        CHECK(rep.d == 2);
        REQUIRE(rep.first.solutions.size() == 1);
        REQUIRE(rep.chains.size() == 1);
        CHECK(rep.chains[0].first_column == vec({1, 2}));
        CHECK(rep.chains[0].second.solutions.empty());
        CHECK(rep.total_chains == 0);
    }
}
