// frieze: exact computations with infinite periodic friezes.
//
// Subcommands: reduce, classify, partner, growth, rows, triangulate, quiver,
// tube, verify. Exit status: 0 on success, 1 on domain error or failed
// check, 2 on usage error.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "friezes/errors.hpp"
#include "friezes/frieze.hpp"
#include "friezes/growth.hpp"
#include "friezes/quiddity.hpp"
#include "friezes/quiver.hpp"
#include "friezes/serialization.hpp"
#include "friezes/triangulation.hpp"
#include "friezes/tube.hpp"
#include "friezes/verify.hpp"

namespace {

using namespace friezes;

void emit_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run_reduce(const std::string& q_text, const std::string& format) {
    const QuidditySequence skel = reduce_to_skeletal(QuidditySequence::parse(q_text));
    if (format == "json") {
        emit_json(to_json(skel));
    } else {
        std::cout << "skeletal: " << skel.str() << "\n";
    }
    return 0;
}

int run_classify(const std::string& q_text, const std::string& format) {
    const std::string cls = to_string(classify(QuidditySequence::parse(q_text)));
    if (format == "json") {
        emit_json(nlohmann::json{{"class", cls}});
    } else {
        std::cout << cls << "\n";
    }
    return 0;
}

int run_partner(const std::string& q_text, const std::string& format) {
    const QuidditySequence p = partner(QuidditySequence::parse(q_text));
    if (format == "json") {
        emit_json(to_json(p));
    } else {
        std::cout << "partner: " << p.str() << "\n";
    }
    return 0;
}

int run_growth(const std::string& q_text, const std::string& method_name, std::int64_t r,
               bool r_given, const std::string& format) {
    const QuidditySequence q = QuidditySequence::parse(q_text);
    const GrowthMethod method = method_name == "rows"      ? GrowthMethod::Rows
                                : method_name == "formula" ? GrowthMethod::Formula
                                                           : GrowthMethod::Both;
    if (!r_given) {
        r = static_cast<std::int64_t>(q.size()) / minimal_period(q);
    }
    const GrowthReport report = growth_report(q, r, method);
    if (format == "json") {
        emit_json(to_json(report));
        return 0;
    }
    if (method == GrowthMethod::Both) {
        std::cout << "rows: " << growth_coefficient_rows(q).str()
                  << ", formula: " << growth_coefficient_formula(q).str() << "\n";
    } else {
        std::cout << report.method << ": " << report.s_q.str() << "\n";
    }
    if (r_given) {
        std::cout << "s:";
        for (const BigInt& s : report.s_sequence) std::cout << ' ' << s.str();
        std::cout << "\n";
    }
    return 0;
}

int run_rows(const std::string& q_text, std::int64_t depth, const std::string& format) {
    const QuidditySequence q = QuidditySequence::parse(q_text);
    if (format == "json") {
        emit_json(rows_to_json(rows(q, static_cast<std::size_t>(depth))));
    } else {
        std::cout << rows_text(q, static_cast<std::size_t>(depth));
    }
    return 0;
}

int run_triangulate(const std::string& q_text, std::int64_t inner_offset,
                    const std::string& out_path, const std::string& format) {
    SkeletalTriangulation t = triangulation_from_quiddity(QuidditySequence::parse(q_text));
    if (inner_offset != 0) t = with_inner_offset(t, inner_offset);
    if (!out_path.empty()) render_svg_file(t, out_path);
    if (format == "json") {
        emit_json(to_json(t));
    } else {
        std::cout << "annulus C_{" << t.outer_count << "," << t.inner_count << "}, "
                  << t.arcs.size() << " bridging arcs\n"
                  << render_net(t);
    }
    return 0;
}

int run_quiver(const std::string& word, const std::string& from_q, const std::string& emit,
               const std::string& out_path, const std::string& format) {
    const NonOrientedCycle cycle =
        word.empty() ? mu(QuidditySequence::parse(from_q)) : NonOrientedCycle(word);
    if (emit == "sigma" || emit == "sigma-tilde") {
        const QuidditySequence q = emit == "sigma" ? sigma(cycle) : sigma_tilde(cycle);
        if (format == "json") {
            emit_json(to_json(q));
        } else {
            std::cout << q.str() << "\n";
        }
        return 0;
    }
    if (emit == "dot") {
        const std::string dot = to_dot(cycle);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out || !(out << dot)) {
                throw IOFailure("cannot write DOT file '" + out_path + "'");
            }
        } else {
            std::cout << dot;
        }
        return 0;
    }
    const NonOrientedCycle shown = emit == "canonical" ? canonicalize(cycle) : cycle;
    if (format == "json") {
        emit_json(to_json(shown));
    } else {
        std::cout << shown.word() << "\n";
    }
    return 0;
}

int run_tube(const std::string& q_text, const std::vector<std::string>& raw_checks,
             std::int64_t max_level, bool max_level_given, const std::string& format) {
    const QuidditySequence q = QuidditySequence::parse(q_text);
    FriezeGrid grid(q);
    const auto n = static_cast<std::int64_t>(q.size());
    if (!max_level_given) max_level = 2 * n;

    std::vector<std::string> checks = raw_checks;
    if (checks.empty() || std::find(checks.begin(), checks.end(), "all") != checks.end()) {
        checks = {"repth", "growth", "ar"};
    }

    nlohmann::json report = nlohmann::json::array();
    bool all_pass = true;
    for (const std::string& name : checks) {
        std::vector<std::pair<std::int64_t, std::int64_t>> failures;
        std::string note;
        if (name == "repth") {
            for (std::int64_t t = 3; t <= max_level; ++t) {
                for (std::int64_t i = 1; i <= n; ++i) {
                    if (repth_rhs(q, i, t) != grid.entry(i, i + t - 1) - grid.entry(i + 1, i + t - 2)) {
                        failures.emplace_back(i, t);
                    }
                }
            }
            note = "levels 3.." + std::to_string(max_level) + ", all starts";
        } else if (name == "growth") {
            if (n < 3) {
                note = "skipped: level n = " + std::to_string(n) + " is below 3";
            } else {
                const BigInt s_rows = growth_coefficient_rows(q);
                if (repth_rhs(q, 1, n) != s_rows || growth_coefficient_formula(q) != s_rows) {
                    failures.emplace_back(1, n);
                }
                note = "level n = " + std::to_string(n) + " against both growth paths";
            }
        } else if (name == "ar") {
            for (std::int64_t t = 1; t <= max_level; ++t) {
                for (std::int64_t i = 1; i <= n; ++i) {
                    if (!verify_ar_diamond(q, {n, i, i + t - 1})) failures.emplace_back(i, t);
                }
            }
            note = "mesh relation, levels 1.." + std::to_string(max_level) + ", all starts";
        } else {
            throw CLI::ValidationError("--check", "unknown check '" + name + "'");
        }
        all_pass = all_pass && failures.empty();
        if (format == "json") {
            nlohmann::json jf = nlohmann::json::array();
            for (auto [i, t] : failures) jf.push_back({i, t});
            report.push_back({{"name", name},
                              {"pass", failures.empty()},
                              {"note", note},
                              {"failures", jf}});
        } else if (failures.empty()) {
            std::cout << name << ": pass (" << note << ")\n";
        } else {
            std::cout << name << ": FAIL at";
            for (auto [i, t] : failures) std::cout << " (start=" << i << ", level=" << t << ")";
            std::cout << "\n";
        }
    }
    if (format == "json") {
        emit_json({{"rank", n}, {"max_level", max_level}, {"checks", report}});
    }
    return all_pass ? 0 : 1;
}

int run_verify(std::vector<std::string> suites, VerifyOptions opt, const std::string& format) {
    if (const char* env = std::getenv("FRIEZE_SEED")) {
        opt.seed = std::strtoull(env, nullptr, 10);
    }
    const std::map<std::string, SuiteResult (*)(const VerifyOptions&)> all = {
        {"reduction", verify_reduction}, {"oracles", verify_oracles},
        {"growth", verify_growth},       {"bijections", verify_bijections},
        {"commutation", verify_commutation}, {"tube", verify_tube},
        {"subsets", verify_subsets}};
    if (suites.empty()) {
        for (const auto& [name, fn] : all) suites.push_back(name);
    }
    std::vector<SuiteResult> results;
    for (const std::string& name : suites) {
        const auto it = all.find(name);
        if (it == all.end()) throw CLI::ValidationError("--suite", "unknown suite '" + name + "'");
        results.push_back(it->second(opt));
    }
    bool all_ok = true;
    if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const SuiteResult& r : results) {
            all_ok = all_ok && r.ok();
            j.push_back({{"name", r.name},
                         {"cases", r.cases},
                         {"failures", r.failures},
                         {"first_failure", r.first_failure}});
        }
        emit_json(j);
    } else {
        std::printf("%-12s %12s %10s\n", "suite", "cases", "failures");
        for (const SuiteResult& r : results) {
            all_ok = all_ok && r.ok();
            std::printf("%-12s %12llu %10llu\n", r.name.c_str(),
                        static_cast<unsigned long long>(r.cases),
                        static_cast<unsigned long long>(r.failures));
            if (!r.ok()) std::printf("  first failure: %s\n", r.first_failure.c_str());
        }
        std::printf("%s (seed %llu)\n", all_ok ? "all suites passed" : "FAILURES detected",
                    static_cast<unsigned long long>(opt.seed));
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with infinite periodic friezes"};
    app.require_subcommand(1);

    std::string q_text, format = "text", method = "both", emit = "word";
    std::string word, from_q, out_path;
    std::int64_t r = 0, depth = 10, inner_offset = 0, max_level = 0;
    std::vector<std::string> checks, suites;
    VerifyOptions opt;

    const auto add_q = [&](CLI::App* cmd) {
        cmd->add_option("-q,--q", q_text, "Quiddity sequence, comma separated")->required();
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* reduce = app.add_subcommand("reduce", "Reduce to the skeletal quiddity sequence");
    add_q(reduce);
    add_format(reduce);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "InfiniteType, FiniteType or Invalid");
    add_q(classify_cmd);
    add_format(classify_cmd);

    CLI::App* partner_cmd =
        app.add_subcommand("partner", "Partner quiddity sequence of a skeletal sequence");
    add_q(partner_cmd);
    add_format(partner_cmd);

    CLI::App* growth = app.add_subcommand("growth", "Growth coefficient");
    add_q(growth);
    add_format(growth);
    growth->add_option("--method", method, "Computation path")
        ->check(CLI::IsMember({"rows", "formula", "both"}))
        ->capture_default_str();
    CLI::Option* r_opt = growth->add_option("--r", r, "Extend the power sequence s_0..s_r");

    CLI::App* rows_cmd = app.add_subcommand("rows", "Print frieze rows");
    add_q(rows_cmd);
    add_format(rows_cmd);
    rows_cmd->add_option("--depth", depth, "Number of rows")->capture_default_str();

    CLI::App* triangulate =
        app.add_subcommand("triangulate", "Skeletal annulus triangulation of a quiddity sequence");
    add_q(triangulate);
    add_format(triangulate);
    triangulate->add_option("--inner-offset", inner_offset, "Rotate inner boundary labels");
    triangulate->add_option("--out", out_path, "Write an SVG rendering to this path");

    CLI::App* quiver = app.add_subcommand("quiver", "Non-oriented cyclic quiver maps");
    add_format(quiver);
    CLI::Option* word_opt = quiver->add_option("--word", word, "Cycle word over I/D");
    quiver->add_option("--from-q", from_q, "Build the quiver of a skeletal quiddity sequence")
        ->excludes(word_opt);
    quiver->add_option("--emit", emit, "What to print")
        ->check(CLI::IsMember({"word", "canonical", "sigma", "sigma-tilde", "dot"}))
        ->capture_default_str();
    quiver->add_option("--out", out_path, "Write DOT output to this path");

    CLI::App* tube = app.add_subcommand("tube", "Check tube identities against the frieze");
    add_q(tube);
    add_format(tube);
    tube->add_option("--check", checks, "repth, growth, ar or all")->delimiter(',');
    CLI::Option* level_opt = tube->add_option("--max-level", max_level, "Top level to check");

    CLI::App* verify = app.add_subcommand("verify", "Run the property suites");
    add_format(verify);
    verify->add_flag("--all", "Run every suite (default when no --suite is given)");
    verify->add_option("--suite", suites,
                       "reduction, oracles, growth, bijections, commutation, tube, subsets")
        ->delimiter(',');
    verify->add_option("--seed", opt.seed, "RNG seed (env FRIEZE_SEED wins)")
        ->capture_default_str();
    verify->add_option("--samples", opt.samples, "Random cases per length above exhaustive bounds")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (reduce->parsed()) return run_reduce(q_text, format);
        if (classify_cmd->parsed()) return run_classify(q_text, format);
        if (partner_cmd->parsed()) return run_partner(q_text, format);
        if (growth->parsed())
            return run_growth(q_text, method, r, r_opt->count() > 0, format);
        if (rows_cmd->parsed()) return run_rows(q_text, depth, format);
        if (triangulate->parsed()) return run_triangulate(q_text, inner_offset, out_path, format);
        if (quiver->parsed()) {
            if (word.empty() && from_q.empty()) {
                std::cerr << "quiver: one of --word / --from-q is required\n";
                return 2;
            }
            return run_quiver(word, from_q, emit, out_path, format);
        }
        if (tube->parsed())
            return run_tube(q_text, checks, max_level, level_opt->count() > 0, format);
        if (verify->parsed()) return run_verify(suites, opt, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";  // what() starts with the code
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
