#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lincode/codefile.hpp"
#include "lincode/errors.hpp"
#include "lincode/extend.hpp"
#include "lincode/minwt.hpp"

using nlohmann::json;
using namespace lincode;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

const char* method_name(SearchMethod m) {
    switch (m) {
        case SearchMethod::Auto: return "auto";
        case SearchMethod::Exhaustive: return "exhaustive";
        case SearchMethod::Linear: return "linear";
        case SearchMethod::Groebner: return "groebner";
    }
    return "auto";
}

json code_json(const GeneratorMatrix& g) {
    return json{{"q", g.field().q()}, {"n", g.n()}, {"k", g.k()}};
}

// Extension-file layout: row i holds coordinate i of every column.
json solution_json(const ColumnBlock& block) {
    json rows = json::array();
    std::size_t k = block.empty() ? 0 : block[0].size();
    for (std::size_t i = 0; i < k; ++i) {
        json row = json::array();
        for (const Vec& col : block) row.push_back(int(col[i]));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string column_str(const Vec& col) {
    std::string s = "(";
    for (std::size_t i = 0; i < col.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(int(col[i]));
    }
    return s + ")";
}

void print_timings(const std::map<std::string, double>& t) {
    std::printf("timings [s]: S_d %.3f equations %.3f groebner %.3f solutions %.3f total %.3f\n",
                t.at("minwt"), t.at("equations"), t.at("groebner"), t.at("solutions"),
                t.at("total"));
}

json timings_json(const std::map<std::string, double>& t) {
    json out;
    for (const auto& [key, val] : t) out[key] = val;
    return out;
}

int run_info(const std::string& path, bool as_json) {
    GeneratorMatrix g = load_code_file(path);
    auto coll = build_information_set_collection(g);
    auto ranks = coll.relative_ranks();
    std::size_t sum = 0;
    for (std::size_t r : ranks) sum += r;
    if (as_json) {
        json sets = json::array();
        for (const auto& e : coll.entries)
            sets.push_back(json{{"columns", e.columns}, {"relative_rank", e.relative_rank}});
        json out{{"tool", "lincode"},
                 {"command", "info"},
                 {"input", path},
                 {"code", code_json(g)},
                 {"info", json{{"mu", coll.mu()},
                               {"relative_ranks", ranks},
                               {"sum_relative_ranks", sum},
                               {"sets", sets}}}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("[%zu,%zu]_%d code\n", g.n(), g.k(), g.field().q());
    std::printf("information sets: %zu, relative rank sum %zu (k = %zu)\n", coll.mu(), sum, g.k());
    for (std::size_t j = 0; j < coll.entries.size(); ++j) {
        std::printf("  I_%zu (r=%zu):", j + 1, coll.entries[j].relative_rank);
        for (std::size_t c : coll.entries[j].columns) std::printf(" %zu", c);
        std::printf("\n");
    }
    return 0;
}

int run_minwt(const std::string& path, bool as_json) {
    GeneratorMatrix g = load_code_file(path);
    auto coll = build_information_set_collection(g);
    MinWeightReport rep = minimum_weight_words(g, coll);
    if (as_json) {
        json trace = json::array();
        for (const auto& b : rep.trace)
            trace.push_back(json{{"w", b.w}, {"d_lb", b.d_lb}, {"d_ub", b.d_ub}});
        json code = code_json(g);
        code["d"] = rep.d;
        json out{{"tool", "lincode"},
                 {"command", "minwt"},
                 {"input", path},
                 {"code", code},
                 {"minwt", json{{"d", rep.d},
                                {"representatives", rep.reps.size()},
                                {"sd_size", rep.count_full},
                                {"trace", trace},
                                {"encodings", rep.encodings_done},
                                {"direct", rep.direct_enumeration}}}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("[%zu,%zu,%zu]_%d code\n", g.n(), g.k(), rep.d, g.field().q());
    std::printf("S_d representatives: %zu, |S_%zu| = %llu\n", rep.reps.size(), rep.d,
                (unsigned long long)rep.count_full);
    for (const auto& b : rep.trace)
        std::printf("  w=%zu: %zu <= d <= %zu\n", b.w, b.d_lb, b.d_ub);
    std::printf("encodings: %llu (%s enumeration)\n", (unsigned long long)rep.encodings_done,
                rep.direct_enumeration ? "direct" : "information-set");
    return 0;
}

SearchMethod parse_method(const std::string& s) {
    if (s == "auto") return SearchMethod::Auto;
    if (s == "exhaustive") return SearchMethod::Exhaustive;
    if (s == "linear") return SearchMethod::Linear;
    return SearchMethod::Groebner;
}

int run_extend(const std::string& path, std::size_t columns, const std::string& method,
               bool all, std::uint64_t pair_budget, std::uint64_t term_budget, bool as_json) {
    auto t_total = Clock::now();
    GeneratorMatrix g = load_code_file(path);
    auto coll = build_information_set_collection(g);

    auto t0 = Clock::now();
    MinWeightReport mw = minimum_weight_words(g, coll);
    double sec_minwt = seconds_since(t0);

    ExtensionProblem problem = make_extension_problem(g, mw, columns);
    SearchOptions opts;
    opts.method = parse_method(method);
    opts.find_all = all;
    opts.budget.pair_reductions = pair_budget;
    opts.budget.max_terms = term_budget;
    SearchResult res = search_extensions(problem, opts);
    const ExtensionSolutionSet& sols = res.solutions;

    bool all_raised = true;
    std::size_t d_new = mw.d;
    for (const ColumnBlock& block : sols.solutions) {
        VerificationReport v = verify_extension(g, block);
        if (!v.raised) all_raised = false;
        d_new = v.d_extended;
    }

    std::map<std::string, double> timings{{"minwt", sec_minwt},
                                          {"equations", res.groebner.seconds_equations},
                                          {"groebner", res.groebner.seconds_groebner},
                                          {"solutions", res.seconds_solutions},
                                          {"total", seconds_since(t_total)}};
    if (as_json) {
        json solutions = json::array();
        for (const ColumnBlock& block : sols.solutions) solutions.push_back(solution_json(block));
        json code = code_json(g);
        code["d"] = mw.d;
        json out{{"tool", "lincode"},
                 {"command", "extend"},
                 {"input", path},
                 {"code", code},
                 {"extend",
                  json{{"columns", columns},
                       {"method_requested", method},
                       {"method_used", method_name(res.method_used)},
                       {"fallback", res.fallback},
                       {"all", all},
                       {"exhausted", sols.exhausted},
                       {"candidates_tested", sols.candidates_tested},
                       {"sd_representatives", mw.reps.size()},
                       {"sd_size", mw.count_full},
                       {"count", sols.solutions.size()},
                       {"solutions", solutions},
                       {"groebner", json{{"pair_reductions", res.groebner.pair_reductions},
                                         {"basis_size", res.groebner.basis_size},
                                         {"contains_constant", res.groebner.constant_basis},
                                         {"jd_used", res.groebner.jd_used}}},
                       {"verification", json{{"all_raised", all_raised}}}}},
                 {"timings", timings_json(timings)}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("[%zu,%zu,%zu]_%d code, extending by %zu column(s)\n", g.n(), g.k(), mw.d,
                g.field().q(), columns);
    std::printf("S_d representatives: %zu, |S_%zu| = %llu\n", mw.reps.size(), mw.d,
                (unsigned long long)mw.count_full);
    std::printf("method: %s (requested %s)%s\n", method_name(res.method_used), method.c_str(),
                res.fallback ? ", fallback after resource limit" : "");
    if (res.method_used == SearchMethod::Groebner)
        std::printf("groebner: basis %zu, pair reductions %llu, Jd used %zu%s\n",
                    res.groebner.basis_size, (unsigned long long)res.groebner.pair_reductions,
                    res.groebner.jd_used, res.groebner.constant_basis ? ", constant basis" : "");
    if (sols.solutions.empty()) {
        std::printf("%s\n", sols.exhausted ? "no extension" : "no extension found (search stopped early)");
    } else {
        std::printf("solutions: %zu%s\n", sols.solutions.size(),
                    sols.exhausted ? "" : " (first found, search stopped early)");
        std::size_t idx = 0;
        for (const ColumnBlock& block : sols.solutions) {
            std::printf("  %zu:", ++idx);
            for (const Vec& col : block) std::printf(" %s", column_str(col).c_str());
            std::printf("\n");
        }
        std::printf("verification: %s (d %zu -> %zu)\n", all_raised ? "pass" : "FAIL", mw.d, d_new);
    }
    print_timings(timings);
    return 0;
}

int run_verify(const std::string& path, const std::string& ext_path, bool as_json) {
    GeneratorMatrix g = load_code_file(path);
    ExtensionFile ext = load_extension_file(ext_path);
    if (ext.q != g.field().q())
        throw WrongField("extension file is over GF(" + std::to_string(ext.q) + "), code over GF(" +
                         std::to_string(g.field().q()) + ")");
    if (ext.k != g.k())
        throw DimensionMismatch("extension columns have length " + std::to_string(ext.k) +
                                ", code dimension is " + std::to_string(g.k()));
    VerificationReport rep = verify_extension(g, ext.columns);
    if (as_json) {
        json code = code_json(g);
        code["d"] = rep.d_original;
        json out{{"tool", "lincode"},
                 {"command", "verify"},
                 {"input", path},
                 {"code", code},
                 {"verify", json{{"extension", ext_path},
                                 {"columns", ext.m},
                                 {"d_original", rep.d_original},
                                 {"d_extended", rep.d_extended},
                                 {"raised", rep.raised},
                                 {"exactly_plus_one", rep.exactly_plus_one}}}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::printf("[%zu,%zu,%zu]_%d code + %zu column(s) -> [%zu,%zu,%zu]_%d\n", g.n(), g.k(),
                rep.d_original, g.field().q(), ext.m, g.n() + ext.m, g.k(), rep.d_extended,
                g.field().q());
    std::printf("d: %zu -> %zu (%s)\n", rep.d_original, rep.d_extended,
                rep.raised ? (rep.exactly_plus_one ? "raised to d+1" : "raised past d+1")
                           : "not raised");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear code extension toolkit"};
    app.require_subcommand(1);

    std::string path, ext_path, method = "auto";
    std::size_t columns = 1;
    std::uint64_t pair_budget = GroebnerBudget{}.pair_reductions;
    std::uint64_t term_budget = GroebnerBudget{}.max_terms;
    std::uint64_t combined_budget = 0;
    bool json_info = false, json_minwt = false, json_extend = false, json_verify = false;
    bool all = false;

    auto* info = app.add_subcommand("info", "information-set diagnostics");
    info->add_option("code", path, "code file")->required();
    info->add_flag("--json", json_info, "JSON report");

    auto* minwt = app.add_subcommand("minwt", "minimum weight and S_d");
    minwt->add_option("code", path, "code file")->required();
    minwt->add_flag("--json", json_minwt, "JSON report");

    auto* extend = app.add_subcommand("extend", "search for distance-raising column blocks");
    extend->add_option("code", path, "code file")->required();
    extend->add_option("--columns", columns, "columns to append")->check(CLI::PositiveNumber);
    extend->add_option("--method", method, "auto|exhaustive|linear|groebner")
        ->check(CLI::IsMember({"auto", "exhaustive", "linear", "groebner"}));
    extend->add_flag("--all", all, "find every solution, not just the first");
    auto* budget = extend->add_option("--budget", combined_budget, "pair-reduction and term budget");
    extend->add_option("--pair-budget", pair_budget, "Groebner pair-reduction budget");
    extend->add_option("--term-budget", term_budget, "polynomial term budget");
    extend->add_flag("--json", json_extend, "JSON report");

    auto* verify = app.add_subcommand("verify", "recompute the extended minimum distance");
    verify->add_option("code", path, "code file")->required();
    verify->add_option("--ext", ext_path, "extension column file")->required();
    verify->add_flag("--json", json_verify, "JSON report");

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget->count()) {
            pair_budget = combined_budget;
            term_budget = combined_budget;
        }
        if (*info) return run_info(path, json_info);
        if (*minwt) return run_minwt(path, json_minwt);
        if (*extend)
            return run_extend(path, columns, method, all, pair_budget, term_budget, json_extend);
        if (*verify) return run_verify(path, ext_path, json_verify);
    } catch (const ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
