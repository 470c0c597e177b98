#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sigsys/analysis.hpp"
#include "sigsys/oracle.hpp"

using namespace sigsys;

namespace {

struct DsetFlags {
    std::string builtins = "d1";
    std::vector<std::string> files;
    std::string wtd_path;
    bool builtins_given = false;
};

void add_dset_flags(CLI::App* cmd, DsetFlags& flags) {
    cmd->add_option("--dset", flags.builtins, "comma-separated built-ins (d1,d2,d3)")
        ->each([&flags](const std::string&) { flags.builtins_given = true; });
    cmd->add_option("--dset-file", flags.files, "custom valued digraph file(s)");
    cmd->add_option("--wtd", flags.wtd_path,
                    "build the odd-cycle valued digraph from the given graph");
}

std::vector<ValuedDigraph> resolve_dset(const DsetFlags& flags) {
    std::vector<ValuedDigraph> dset;
    bool custom = !flags.files.empty() || !flags.wtd_path.empty();
    if (flags.builtins_given || !custom) {
        std::stringstream ss(flags.builtins);
        std::string name;
        while (std::getline(ss, name, ','))
            if (!name.empty()) dset.push_back(builtin(parse_builtin_digraph(name)));
    }
    for (const auto& path : flags.files) dset.push_back(read_valued_digraph_file(path));
    if (!flags.wtd_path.empty()) dset.push_back(odd_cycle_digraph(read_graph_file(flags.wtd_path)));
    return dset;
}

void add_param_flags(CLI::App* cmd, SystemParams& params) {
    cmd->add_option("--sig-p", params.sig_p, "signature coefficient p");
    cmd->add_option("--sig-q", params.sig_q, "signature coefficient q");
    cmd->add_option("--parity-p", params.parity_p, "parity coefficient p");
    cmd->add_option("--parity-q", params.parity_q, "parity right-hand side q");
}

void emit_graph(const Graph& g, const std::string& out_path) {
    if (out_path.empty())
        write_graph(std::cout, g);
    else
        write_graph_file(out_path, g);
}

std::string torsion_text(const GroupSummary& g) {
    std::string t = "[";
    for (size_t i = 0; i < g.torsion.size(); ++i)
        t += (i ? "," : "") + std::to_string(g.torsion[i]);
    return t + "]";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integer signature systems on finite graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a named graph");
    std::string gen_name, gen_out, gen_base;
    int gen_n = 0, gen_levels = 1;
    gen->add_option("name", gen_name, "cycle|complete|looped_path|u53|c7_power3|mycielski")
        ->required();
    gen->add_option("n", gen_n, "size parameter");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");
    gen->add_option("--base", gen_base, "base graph file for mycielski");
    gen->add_option("--levels", gen_levels, "cone levels for mycielski");

    // group
    auto* group_cmd = app.add_subcommand("group", "quotient group presentation");
    std::string group_path;
    bool group_json = false;
    DsetFlags group_dset;
    group_cmd->add_option("graph", group_path, "graph file")->required();
    add_dset_flags(group_cmd, group_dset);
    group_cmd->add_flag("--json", group_json, "JSON output");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full signature-system analysis");
    std::string analyze_path, analyze_target;
    bool analyze_json = false, analyze_cert = false;
    DsetFlags analyze_dset;
    SystemParams analyze_params;
    analyze->add_option("graph", analyze_path, "graph file")->required();
    add_dset_flags(analyze, analyze_dset);
    add_param_flags(analyze, analyze_params);
    analyze->add_option("--target", analyze_target, "no-homomorphism test target graph");
    analyze->add_flag("--json", analyze_json, "JSON output");
    analyze->add_flag("--certificate", analyze_cert, "include a walk certificate if feasible");

    // certify
    auto* certify = app.add_subcommand("certify", "extract and verify a walk certificate");
    std::string certify_path;
    bool certify_json = false;
    DsetFlags certify_dset;
    certify->add_option("graph", certify_path, "graph file")->required();
    add_dset_flags(certify, certify_dset);
    certify->add_flag("--json", certify_json, "JSON output");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exponential-graph brute force");
    std::string oracle_path;
    int oracle_cycle = 3;
    oracle->add_option("graph", oracle_path, "graph file")->required();
    oracle->add_option("--cycle", oracle_cycle, "odd cycle length")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            Graph g;
            if (gen_name == "mycielski") {
                if (gen_base.empty())
                    throw std::invalid_argument("gen mycielski needs --base");
                g = mycielski_cone(read_graph_file(gen_base), gen_levels);
            } else {
                g = gen_named(parse_named_graph(gen_name), gen_n);
            }
            emit_graph(g, gen_out);
        } else if (*group_cmd) {
            Graph h = read_graph_file(group_path);
            ArcTable arcs(h);
            auto dset = resolve_dset(group_dset);
            RelationSet rel = theta(dset, h, arcs);
            GroupSummary g = summarise_group(quotient(arcs.size(), rel.relations));
            if (group_json) {
                nlohmann::json j = {{"free_rank", g.free_rank}, {"torsion", g.torsion}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "free_rank " << g.free_rank << "\n"
                          << "torsion " << torsion_text(g) << "\n";
            }
        } else if (*analyze) {
            Graph h = read_graph_file(analyze_path);
            AnalysisOptions opts;
            opts.params = analyze_params;
            opts.with_certificate = analyze_cert;
            if (!analyze_target.empty()) opts.target = read_graph_file(analyze_target);
            AnalysisReport r = run_analysis(h, resolve_dset(analyze_dset), opts);
            if (analyze_json) {
                std::cout << to_json(r).dump() << "\n";
            } else {
                std::cout << "vertices " << r.graph.vertices << ", edges " << r.graph.edges
                          << ", arcs " << r.graph.arcs << ", 4-cycles "
                          << r.graph.four_cycles << "\n";
                if (r.group)
                    std::cout << "group: free_rank " << r.group->free_rank << ", torsion "
                              << torsion_text(*r.group) << "\n";
                if (r.system)
                    std::cout << "system: " << r.system->variables << " variables, "
                              << r.system->equations << " equations, "
                              << (r.system->feasible ? "feasible" : "infeasible") << "\n";
                std::cout << "conclusions:";
                for (const auto& c : r.conclusions) std::cout << " " << c;
                std::cout << "\n";
            }
        } else if (*certify) {
            Graph h = read_graph_file(certify_path);
            auto dset = resolve_dset(certify_dset);
            SignatureSystem s = build_system(h, dset);
            auto sol = solve_system(s);
            if (!sol) {
                std::cout << "infeasible\n";
                return 1;
            }
            WalkCertificate w = extract_certificate(s, *sol);
            bool ok = verify_certificate(h, s.arcs, s.group, w);
            if (certify_json) {
                nlohmann::json j = {{"walk", w.walk},
                                    {"length", w.length()},
                                    {"verified", ok}};
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "walk";
                for (int v : w.walk) std::cout << " " << v;
                std::cout << "\nlength " << w.length() << "\n"
                          << (ok ? "valid" : "INVALID") << "\n";
            }
            if (!ok) return 1;
        } else if (*oracle) {
            Graph h = read_graph_file(oracle_path);
            ArcTable arcs(h);
            ConstantComponent comp = component_of_constants(h, oracle_cycle);
            RelationSet rel = theta({builtin(BuiltinDigraph::d1)}, h, arcs);
            QuotientPresentation q = quotient(arcs.size(), rel.relations);
            int zero = 0;
            for (const auto& f : comp.loops) {
                FreeWord w = free_signature(h, arcs, oracle_cycle, f, f);
                std::vector<long long> ab = abelianise(w, arcs.size());
                std::vector<Int> vec(ab.begin(), ab.end());
                if (q.project(vec).is_zero()) ++zero;
            }
            std::cout << "component " << comp.members.size() << "\n"
                      << "loops " << comp.loops.size() << "\n"
                      << "zero_signature_loops " << zero << "\n";
        }
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
