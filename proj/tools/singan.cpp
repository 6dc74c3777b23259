#include "singan/catalog.hpp"
#include "singan/document.hpp"
#include "singan/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitClaimFailed = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw singan::ValidationError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

singan::Rational parse_rational_arg(const std::string& text, const char* flag) {
    try {
        return singan::parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw singan::ValidationError(std::string(flag) + ": expected an exact rational p/q");
    }
}

void print_verification(const singan::VerificationResult& r) {
    std::cout << (r.holds ? "[PASS] " : "[FAIL] ") << r.claim << "\n";
    std::cout << "  search space: " << r.search_space << "\n";
    if (r.extremal_value)
        std::cout << "  extremal delta' = " << singan::to_string(*r.extremal_value) << "\n";
    if (r.witness) {
        std::cout << "  cycle:";
        for (int j = 0; j < r.witness->size(); ++j)
            std::cout << " " << r.witness->graph().vertex(j).name << "="
                      << singan::to_string((*r.witness)[j]);
        std::cout << "\n";
    }
    for (const std::string& n : r.notes)
        std::cout << "  " << n << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"invariants of normal surface singularities from resolution dual graphs"};
    app.require_subcommand(1);

    std::string file_arg;
    bool json_out = false;
    bool adjoint = false;

    auto* analyze = app.add_subcommand("analyze", "full invariant and classification report");
    analyze->add_option("file", file_arg, "graph file")->required();
    analyze->add_flag("--json", json_out, "JSON output");
    analyze->add_flag("--adjoint", adjoint, "reject boundary coefficients b=1");

    auto* classify_cmd = app.add_subcommand("classify", "classification flags only");
    classify_cmd->add_option("file", file_arg, "graph file")->required();
    classify_cmd->add_flag("--json", json_out, "JSON output");

    std::string m2_text, mc_text;
    bool mc_positive = false;
    auto* reider = app.add_subcommand("reider", "evaluate the freeness criteria");
    reider->add_option("file", file_arg, "graph file")->required();
    reider->add_option("--m2", m2_text, "M^2, exact rational")->required();
    reider->add_option("--mc", mc_text, "min M.C over curves through y, exact rational")
        ->required();
    reider->add_flag("--mc-positive", mc_positive, "assert min M.C > 0");
    reider->add_flag("--adjoint", adjoint, "reject boundary coefficients b=1");

    std::string verify_mode;
    int headroom = 2;
    int cap = -1;
    int trials = 50;
    std::uint64_t seed_opt = 0;
    bool seed_given = false;
    bool exercise_lc = false;
    auto* verify = app.add_subcommand("verify", "brute-force verification oracles");
    verify->add_option("mode", verify_mode, "prop210|fundcycle|tech|laufer")->required();
    verify->add_option("file", file_arg, "graph file")->required();
    verify->add_option("--headroom", headroom, "prop210 headroom above z_j (default 2)");
    verify->add_option("--cap", cap, "fundcycle coefficient cap (default max z_j + 3)");
    verify->add_option("--trials", trials, "laufer shuffle count (default 50)");
    auto* seed_option = verify->add_option("--seed", seed_opt, "RNG seed");
    verify->add_flag("--exercise-lc", exercise_lc, "log-canonical exploration mode for prop210");

    std::string catalog_name;
    bool as_file = false;
    auto* catalog = app.add_subcommand("catalog", "built-in fixture graphs");
    auto* cat_list = catalog->add_subcommand("list", "list entries");
    auto* cat_show = catalog->add_subcommand("show", "show one entry");
    cat_show->add_option("name", catalog_name, "entry name")->required();
    cat_show->add_flag("--json", json_out, "JSON output");
    cat_show->add_flag("--file", as_file, "print as a graph file");
    catalog->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    seed_given = seed_option->count() > 0;

    try {
        if (analyze->parsed() || classify_cmd->parsed()) {
            singan::GraphFile file = singan::parse_graph_file(slurp(file_arg));
            singan::InvariantSet inv = singan::compute_invariants(file.graph);
            singan::SingularityReport report = singan::classify(file.graph, inv);
            std::optional<singan::TripleReport> triple;
            if (!file.curves.empty())
                triple = singan::triple_classify(file.graph, inv, file.curves, adjoint);
            nlohmann::ordered_json doc =
                singan::analysis_document(file, report, triple ? &*triple : nullptr);
            if (classify_cmd->parsed()) {
                if (json_out)
                    std::cout << doc.at("classification").dump(2) << "\n";
                else
                    for (const auto& [k, v] : doc.at("classification").items())
                        std::cout << k << " = " << v.dump() << "\n";
            } else if (json_out) {
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << singan::render_text(file, report, triple ? &*triple : nullptr);
            }
            return kExitOk;
        }

        if (reider->parsed()) {
            singan::GraphFile file = singan::parse_graph_file(slurp(file_arg));
            singan::InvariantSet inv = singan::compute_invariants(file.graph);
            singan::SingularityReport report = singan::classify(file.graph, inv);
            singan::ReiderQuery q;
            q.m2 = parse_rational_arg(m2_text, "--m2");
            q.mc_min = parse_rational_arg(mc_text, "--mc");
            q.mc_strict_positive = mc_positive;
            if (file.graph.smooth_point_mode()) {
                singan::SmoothPointInfo info =
                    singan::smooth_point_info(file.graph, file.curves, q);
                std::cerr << "error: smooth point is out of scope of Theorems 6-7; "
                             "informational thresholds follow on stdout\n";
                std::cout << singan::smooth_info_json(info).dump(2) << "\n";
                return kExitInput;
            }
            singan::TripleReport triple =
                singan::triple_classify(file.graph, inv, file.curves, adjoint);
            singan::ReiderVerdict verdict = singan::reider_check(report, triple, q);
            std::cout << singan::verdict_json(verdict).dump(2) << "\n";
            return kExitOk;
        }

        if (verify->parsed()) {
            singan::GraphFile file = singan::parse_graph_file(slurp(file_arg));
            const singan::DualGraph& g = file.graph;
            std::uint64_t seed =
                seed_given ? seed_opt : singan::effective_seed(20240817ull);
            singan::VerificationResult res;
            if (verify_mode == "prop210") {
                res = singan::verify_prop_2_10(g, headroom, exercise_lc);
            } else if (verify_mode == "fundcycle") {
                if (cap < 0) {
                    singan::Cycle z = singan::fundamental_cycle(g);
                    int zmax = 0;
                    for (int j = 0; j < g.size(); ++j)
                        zmax = std::max(zmax, static_cast<int>(numerator(z[j])));
                    cap = zmax + 3;
                }
                res = singan::verify_fundamental_minimality(g, cap);
            } else if (verify_mode == "tech") {
                res = singan::verify_tech_lemma(g);
            } else if (verify_mode == "laufer") {
                res = singan::verify_laufer_order_independence(g, trials, seed);
            } else {
                std::cerr << "error: unknown verify mode '" << verify_mode << "'\n";
                return kExitUsage;
            }
            print_verification(res);
            return res.holds ? kExitOk : kExitClaimFailed;
        }

        if (cat_list->parsed()) {
            for (const std::string& name : singan::catalog_names())
                std::cout << name << "\n";
            return kExitOk;
        }
        if (cat_show->parsed()) {
            singan::CatalogEntry entry = singan::builtin(catalog_name);
            singan::GraphFile file{entry.graph, {}};
            if (as_file) {
                std::cout << singan::serialize_graph_file(file);
                return kExitOk;
            }
            singan::InvariantSet inv = singan::compute_invariants(entry.graph);
            singan::SingularityReport report = singan::classify(entry.graph, inv);
            if (json_out) {
                nlohmann::ordered_json doc = singan::analysis_document(file, report);
                doc["catalog"] = {{"name", entry.name},
                                  {"provenance", entry.provenance},
                                  {"derived", entry.derived}};
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << "# " << entry.name << " -- " << entry.provenance
                          << (entry.derived ? " (derived values)" : "") << "\n";
                std::cout << singan::serialize_graph_file(file);
                std::cout << singan::render_text(file, report);
            }
            return kExitOk;
        }
    } catch (const singan::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const singan::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
