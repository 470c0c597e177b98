#include "sigsys/analysis.hpp"

#include <algorithm>

namespace sigsys {

using nlohmann::json;

namespace {

std::string dec(const Int& x) { return x.str(); }

json summary_json(const SystemSummary& s) {
    return {{"variables", s.variables}, {"equations", s.equations}, {"feasible", s.feasible}};
}

SystemSummary summary_from(const json& j) {
    return {j.at("variables").get<int>(), j.at("equations").get<int>(),
            j.at("feasible").get<bool>()};
}

}  // namespace

json to_json(const AnalysisReport& r) {
    json j;
    j["graph"] = {{"vertices", r.graph.vertices},
                  {"edges", r.graph.edges},
                  {"arcs", r.graph.arcs},
                  {"bipartite", r.graph.bipartite},
                  {"four_cycles", r.graph.four_cycles}};
    j["dset"] = r.dset;
    if (r.group)
        j["group"] = {{"free_rank", r.group->free_rank}, {"torsion", r.group->torsion}};
    if (r.system) j["system"] = summary_json(*r.system);
    j["conclusions"] = r.conclusions;
    if (r.solution)
        j["solution"] = {{"arc_values", r.solution->arc_values},
                         {"N", r.solution->n},
                         {"torsion_aux", r.solution->torsion_aux}};
    if (r.certificate)
        j["certificate"] = {{"walk", r.certificate->walk},
                            {"length", r.certificate->length}};
    if (r.k3_reference) j["k3"] = summary_json(*r.k3_reference);
    return j;
}

AnalysisReport report_from_json(const json& j) {
    AnalysisReport r;
    const json& g = j.at("graph");
    r.graph = {g.at("vertices").get<int>(), g.at("edges").get<int>(), g.at("arcs").get<int>(),
               g.at("bipartite").get<bool>(), g.at("four_cycles").get<long long>()};
    r.dset = j.at("dset").get<std::vector<std::string>>();
    if (j.contains("group"))
        r.group = GroupSummary{j["group"].at("free_rank").get<int>(),
                               j["group"].at("torsion").get<std::vector<long long>>()};
    if (j.contains("system")) r.system = summary_from(j["system"]);
    r.conclusions = j.at("conclusions").get<std::vector<std::string>>();
    if (j.contains("solution"))
        r.solution = SolutionRecord{
            j["solution"].at("arc_values").get<std::vector<std::string>>(),
            j["solution"].at("N").get<std::string>(),
            j["solution"].at("torsion_aux").get<std::vector<std::string>>()};
    if (j.contains("certificate"))
        r.certificate = CertificateRecord{j["certificate"].at("walk").get<std::vector<int>>(),
                                          j["certificate"].at("length").get<int>()};
    if (j.contains("k3")) r.k3_reference = summary_from(j["k3"]);
    return r;
}

GroupSummary summarise_group(const QuotientPresentation& q) {
    GroupSummary g;
    g.free_rank = q.free_rank();
    for (const Int& d : q.invariant_factors())
        g.torsion.push_back(d.convert_to<long long>());
    std::sort(g.torsion.begin(), g.torsion.end());
    return g;
}

AnalysisReport run_analysis(const Graph& h, const std::vector<ValuedDigraph>& dset,
                            const AnalysisOptions& opts) {
    AnalysisReport r;
    ArcTable arcs(h);
    r.graph.vertices = h.vertex_count();
    r.graph.edges = h.edge_count();
    r.graph.arcs = arcs.size();
    r.graph.bipartite = is_bipartite(h);
    r.graph.four_cycles = h.is_simple() ? count_4cycles(h) : 0;
    for (const auto& d : dset) r.dset.push_back(d.name);

    if (r.graph.bipartite) {
        r.conclusions.push_back("bipartite_coind_le_2");
        return r;
    }

    SignatureSystem s = build_system(h, dset, opts.params, opts.guard);
    r.group = summarise_group(s.group);
    auto sol = solve_system(s);
    r.system = SystemSummary{s.a.cols(), s.a.rows(), sol.has_value()};

    std::optional<bool> k3_feasible;
    if (sol) {
        SignatureSystem k3 = build_system(gen_named(NamedGraph::complete, 3), dset,
                                          opts.params, opts.guard);
        auto k3_sol = solve_system(k3);
        k3_feasible = k3_sol.has_value();
        r.k3_reference = SystemSummary{k3.a.cols(), k3.a.rows(), k3_sol.has_value()};
    }
    std::optional<bool> target_proof;
    if (opts.target) {
        auto proof = no_hom_test(h, *opts.target, dset, opts.params, opts.guard);
        target_proof = proof.has_value();
    }
    Verdict v = make_verdict(s, sol.has_value(), k3_feasible, target_proof);
    r.conclusions = v.conclusions;
    if (!(sol && k3_feasible && !*k3_feasible)) r.k3_reference.reset();

    if (sol) {
        SolutionRecord rec;
        for (const Int& x : sol->arc_values) rec.arc_values.push_back(dec(x));
        rec.n = dec(sol->n);
        for (const Int& x : sol->torsion_aux) rec.torsion_aux.push_back(dec(x));
        r.solution = rec;
        if (opts.with_certificate && opts.params.is_default()) {
            WalkCertificate w = extract_certificate(s, *sol);
            r.certificate = CertificateRecord{w.walk, w.length()};
        }
    }
    return r;
}

}  // namespace sigsys
