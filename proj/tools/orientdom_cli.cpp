// orientdom: exact solver and verification toolkit for orientable total
// domination.
//
// Subcommands: solve, domt, DOMT, DOM, spectrum, construct, verify, scan,
// families, checks. Results go to stdout, diagnostics to stderr.
// Exit codes: 0 success/verified, 1 a check was refuted, 2 usage error,
// 3 budget exceeded, 4 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "orientdom/checks.hpp"
#include "orientdom/constructions.hpp"
#include "orientdom/corpus.hpp"
#include "orientdom/graph6.hpp"
#include "orientdom/report.hpp"
#include "orientdom/structure.hpp"

namespace od = orientdom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

int exit_code_for(od::ErrorCode code) {
    switch (code) {
        case od::ErrorCode::TooManyOrientations:
        case od::ErrorCode::BudgetExceeded:
            return kExitBudget;
        case od::ErrorCode::UsageError:
        case od::ErrorCode::UnknownCheck:
            return kExitUsage;
        default:
            return kExitInput;
    }
}

struct GraphInput {
    std::string graph6;
    std::string file;
    std::string family;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--graph6", graph6, "graph in graph6 format");
        cmd->add_option("--file", file, "path to a graph6 or \"n m\" edge-list file");
        cmd->add_option("--family", family, "family spec, e.g. grid:6,8 or familyF:4,3");
    }

    bool given() const { return !graph6.empty() || !file.empty() || !family.empty(); }

    od::Graph load(std::optional<od::FamilySpec>* family_out = nullptr) const {
        int sources = (!graph6.empty() ? 1 : 0) + (!file.empty() ? 1 : 0) + (!family.empty() ? 1 : 0);
        if (sources != 1)
            od::fail(od::ErrorCode::UsageError,
                     "give the graph exactly one way: --graph6, --file or --family");
        if (!graph6.empty()) return od::parse_graph6(graph6);
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) od::fail(od::ErrorCode::IoError, "cannot open " + file);
            std::stringstream buffer;
            buffer << in.rdbuf();
            return od::parse_graph_auto(buffer.str());
        }
        od::FamilySpec spec = od::parse_family_spec(family);
        if (family_out) *family_out = spec;
        return od::make_family(spec);
    }
};

od::RunConfig g_cfg;

void add_common_flags(CLI::App& app) {
    app.add_option("--workers", g_cfg.workers, "worker threads (0 = all cores)")
        ->envname("ORIENTDOM_WORKERS");
    app.add_option("--edge-cap", g_cfg.edge_cap,
                   "orientation searches refuse graphs with more edges than this")
        ->envname("ORIENTDOM_EDGE_CAP");
    app.add_option("--node-budget", g_cfg.node_budget, "search-node budget for structural scans");
    app.add_option("--seed", g_cfg.seed, "seed for sampled checks");
    app.add_option("--output-dir", g_cfg.output_dir, "directory for scan persistence");
    static const std::map<std::string, od::RunConfig::Format> formats{
        {"json", od::RunConfig::Format::Json},
        {"text", od::RunConfig::Format::Text},
        {"dot", od::RunConfig::Format::Dot}};
    app.add_option("--format", g_cfg.format, "output format: json, text or dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_flag_callback(
        "--no-timing", [] { g_cfg.timing = false; },
        "report elapsedMs as 0 so outputs are byte-stable");
}

int run_extremum(const GraphInput& input, od::ExtremalQuantity quantity) {
    std::optional<od::FamilySpec> family;
    od::Graph g = input.load(&family);
    od::OptimizeOptions opts = od::optimize_options(g_cfg);
    if (quantity == od::ExtremalQuantity::DOMT && family) {
        // a registered family bound lets the maximum search stop early
        try {
            od::PredictedQuantity p = od::predicted(*family, od::PredictedFor::DOMT);
            if (p.relation == od::PredictedRelation::Equals ||
                p.relation == od::PredictedRelation::AtMost)
                opts.known_upper_bound = p.bound;
            else if (p.relation == od::PredictedRelation::Between)
                opts.known_upper_bound = p.bound_hi;
        } catch (const od::Error&) {
        }
    }
    od::ExtremumReport r = quantity == od::ExtremalQuantity::DomT   ? od::dom_t(g, opts)
                           : quantity == od::ExtremalQuantity::DOMT ? od::DOM_t(g, opts)
                                                                    : od::DOM(g, opts);
    std::cout << od::emit_extremum_report(r, g_cfg);
    return r.exact ? kExitOk : kExitBudget;
}

od::Orientation orientation_from_flags(const od::Graph& g, const std::string& dir_bits,
                                       const std::string& arc_list) {
    if (!dir_bits.empty() && !arc_list.empty())
        od::fail(od::ErrorCode::UsageError, "give --dir or --arcs, not both");
    if (!dir_bits.empty()) return od::orient(g, od::parse_dir_bits(dir_bits));
    if (arc_list.empty()) od::fail(od::ErrorCode::UsageError, "solve needs --dir or --arcs");
    std::vector<std::pair<int, int>> arcs;
    std::stringstream ss(arc_list);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto gt = part.find('>');
        if (gt == std::string::npos)
            od::fail(od::ErrorCode::UsageError, "arcs look like \"0>1,1>2,2>0\"");
        arcs.emplace_back(std::stoi(part.substr(0, gt)), std::stoi(part.substr(gt + 1)));
    }
    return od::orient_by_arcs(g, arcs);
}

od::ConstructionResult run_construction(const std::string& name, const std::vector<int>& p,
                                        const GraphInput& input) {
    auto want = [&](size_t k) {
        if (p.size() != k)
            od::fail(od::ErrorCode::UsageError,
                     name + " takes " + std::to_string(k) + " integer parameter(s)");
    };
    if (name == "bipartite-min") {
        want(2);
        return od::bipartite_min_orientation(p[0], p[1]);
    }
    if (name == "bipartite-max") {
        want(2);
        return od::bipartite_max_orientation(p[0], p[1]);
    }
    if (name == "bipartite-k") {
        want(3);
        return od::bipartite_k_orientation(p[0], p[1], p[2]);
    }
    if (name == "ladder-min") {
        want(1);
        return od::ladder_min_orientation(p[0]);
    }
    if (name == "ladder-max") {
        want(1);
        return od::ladder_max_orientation(p[0]);
    }
    if (name == "grid-min") {
        want(2);
        return od::grid_min_orientation(p[0], p[1]);
    }
    if (name == "grid-max") {
        want(2);
        return od::grid_max_orientation(p[0], p[1]);
    }
    if (name == "induced-cycle") return od::induced_cycle_orientation(input.load());
    od::fail(od::ErrorCode::UsageError, "unknown construction " + name);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and verification toolkit for orientable total domination"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    add_common_flags(app);

    auto* solve = app.add_subcommand("solve", "gamma_t or gamma of one oriented graph");
    GraphInput solve_input;
    solve_input.add_flags(solve);
    std::string solve_dir, solve_arcs, solve_quantity = "gamma_t";
    solve->add_option("--dir", solve_dir, "direction bits, one per edge in canonical order");
    solve->add_option("--arcs", solve_arcs, "arc list, e.g. \"0>1,1>2,2>0\"");
    solve->add_option("--quantity", solve_quantity, "gamma_t (default) or gamma")
        ->check(CLI::IsMember({"gamma_t", "gamma"}));

    auto* domt = app.add_subcommand("domt", "minimum gamma_t over valid orientations");
    GraphInput domt_input;
    domt_input.add_flags(domt);
    auto* DOMT = app.add_subcommand("DOMT", "maximum gamma_t over valid orientations");
    GraphInput DOMT_input;
    DOMT_input.add_flags(DOMT);
    auto* DOM = app.add_subcommand("DOM", "maximum gamma over all orientations");
    GraphInput DOM_input;
    DOM_input.add_flags(DOM);

    auto* spectrum = app.add_subcommand("spectrum", "all achievable gamma_t values");
    GraphInput spectrum_input;
    spectrum_input.add_flags(spectrum);

    auto* construct = app.add_subcommand("construct", "build a named witness orientation");
    std::string construct_name;
    std::vector<int> construct_params;
    GraphInput construct_input;
    construct
        ->add_option("name", construct_name,
                     "bipartite-min|bipartite-max|bipartite-k|ladder-min|ladder-max|"
                     "grid-min|grid-max|induced-cycle")
        ->required();
    construct->add_option("params", construct_params, "integer parameters");
    construct_input.add_flags(construct);

    auto* verify = app.add_subcommand("verify", "run one registered check");
    std::string verify_id, verify_corpus;
    int verify_max_edges = 18;
    GraphInput verify_input;
    verify->add_option("check", verify_id, "check id (see `checks`)")->required();
    verify->add_option("--corpus", verify_corpus, "exhaustive:N, file:PATH or sweep:...");
    verify->add_option("--max-edges", verify_max_edges, "skip graphs with more edges");
    verify_input.add_flags(verify);

    auto* scan = app.add_subcommand("scan", "run checks across a corpus, JSON-lines output");
    std::string scan_corpus_spec, scan_checks;
    int scan_max_edges = 18;
    bool scan_resume = false;
    scan->add_option("corpus", scan_corpus_spec, "exhaustive:N, file:PATH or sweep:...")
        ->required();
    scan->add_option("--checks", scan_checks, "comma-separated check ids (default: per-graph)");
    scan->add_option("--max-edges", scan_max_edges, "skip corpus graphs with more edges");
    scan->add_flag("--resume", scan_resume, "continue from the persisted cursor");

    auto* families_cmd = app.add_subcommand("families", "list family specs and numbering");
    auto* checks_cmd = app.add_subcommand("checks", "list registered checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve) {
            od::Graph g = solve_input.load();
            od::Orientation o = orientation_from_flags(g, solve_dir, solve_arcs);
            od::SolveResult r = solve_quantity == "gamma" ? od::gamma(o) : od::gamma_t(o);
            std::cout << od::emit_solve_report(o, solve_quantity, r, g_cfg);
            return kExitOk;
        }
        if (*domt) return run_extremum(domt_input, od::ExtremalQuantity::DomT);
        if (*DOMT) return run_extremum(DOMT_input, od::ExtremalQuantity::DOMT);
        if (*DOM) return run_extremum(DOM_input, od::ExtremalQuantity::DOMPlain);
        if (*spectrum) {
            od::Graph g = spectrum_input.load();
            od::Spectrum sp = od::td_spectrum(g, od::optimize_options(g_cfg));
            std::cout << od::emit_spectrum_report(g, sp, g_cfg);
            return sp.exact ? kExitOk : kExitBudget;
        }
        if (*construct) {
            od::ConstructionResult r =
                run_construction(construct_name, construct_params, construct_input);
            std::cout << od::emit_construction_report(construct_name, r, g_cfg);
            return kExitOk;
        }
        if (*verify) {
            od::CheckBudget budget = od::check_budget(g_cfg);
            budget.corpus_edge_cap = verify_max_edges;
            bool refuted = false;
            auto emit = [&](const od::CheckOutcome& oc) {
                std::cout << od::emit_check_outcome(oc, g_cfg);
                if (oc.status == od::CheckOutcome::Status::Refuted) refuted = true;
            };
            if (!od::is_known_check(verify_id))
                od::fail(od::ErrorCode::UnknownCheck, "no check named '" + verify_id + "'");
            if (!verify_corpus.empty()) {
                od::Corpus corpus = od::parse_corpus_spec(verify_corpus);
                od::ScanSummary summary = od::scan_corpus(corpus, {verify_id}, budget, emit);
                std::cout << od::emit_scan_summary(summary, g_cfg);
            } else if (verify_input.given()) {
                for (const auto& oc : od::run_check(verify_id, verify_input.load(), budget)) emit(oc);
            } else {
                for (const auto& oc : od::run_check(verify_id, budget)) emit(oc);
            }
            return refuted ? kExitRefuted : kExitOk;
        }
        if (*scan) {
            od::Corpus corpus = od::parse_corpus_spec(scan_corpus_spec);
            corpus.filter.max_edges = scan_max_edges;
            od::CheckBudget budget = od::check_budget(g_cfg);
            budget.corpus_edge_cap = scan_max_edges;
            std::vector<std::string> ids;
            if (scan_checks.empty()) {
                for (const auto& info : od::list_checks())
                    if (info.per_graph) ids.push_back(info.id);
            } else {
                std::stringstream ss(scan_checks);
                std::string part;
                while (std::getline(ss, part, ','))
                    if (!part.empty()) ids.push_back(part);
            }
            std::string cursor_path;
            if (!g_cfg.output_dir.empty()) {
                std::filesystem::create_directories(g_cfg.output_dir);
                cursor_path = g_cfg.output_dir + "/scan.cursor";
                if (!scan_resume) std::filesystem::remove(cursor_path);
            }
            bool refuted = false;
            od::ScanSummary summary = od::scan_corpus(
                corpus, ids, budget,
                [&](const od::CheckOutcome& oc) {
                    std::cout << od::emit_check_outcome(oc, g_cfg);
                    if (oc.status == od::CheckOutcome::Status::Refuted) refuted = true;
                },
                cursor_path);
            std::cout << od::emit_scan_summary(summary, g_cfg);
            return refuted ? kExitRefuted : kExitOk;
        }
        if (*families_cmd) {
            std::cout << "path:N cycle:N complete:N completeBipartite:M,N wheel:N grid:M,N\n"
                         "ladder:M familyF:K,L cycleWithLeaves:C1,...,CK product(SPEC,SPEC)\n"
                         "grid vertices are row-major: u_{i,j} -> (i-1)*N + (j-1)\n"
                         "ladder: u_i -> i-1, v_i -> M+i-1; familyF: cycle 0..K-1, path K..K+L-2\n";
            return kExitOk;
        }
        if (*checks_cmd) {
            for (const auto& info : od::list_checks())
                std::cout << info.id << "\t" << (info.per_graph ? "per-graph" : "builtin") << "\t"
                          << info.description << "\t" << info.anchor << "\n";
            return kExitOk;
        }
    } catch (const od::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
