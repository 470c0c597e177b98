#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sigsys/system.hpp"

namespace sigsys {

struct GraphSummary {
    int vertices = 0;
    int edges = 0;
    int arcs = 0;
    bool bipartite = false;
    long long four_cycles = 0;

    bool operator==(const GraphSummary&) const = default;
};

struct GroupSummary {
    int free_rank = 0;
    std::vector<long long> torsion;  // sorted ascending

    bool operator==(const GroupSummary&) const = default;
};

struct SystemSummary {
    int variables = 0;
    int equations = 0;
    bool feasible = false;

    bool operator==(const SystemSummary&) const = default;
};

struct SolutionRecord {
    std::vector<std::string> arc_values;  // decimal strings, arc-table order
    std::string n;
    std::vector<std::string> torsion_aux;

    bool operator==(const SolutionRecord&) const = default;
};

struct CertificateRecord {
    std::vector<int> walk;
    int length = 0;

    bool operator==(const CertificateRecord&) const = default;
};

struct AnalysisReport {
    GraphSummary graph;
    std::vector<std::string> dset;
    std::optional<GroupSummary> group;
    std::optional<SystemSummary> system;
    std::vector<std::string> conclusions;
    std::optional<SolutionRecord> solution;
    std::optional<CertificateRecord> certificate;
    std::optional<SystemSummary> k3_reference;

    bool operator==(const AnalysisReport&) const = default;
};

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);

GroupSummary summarise_group(const QuotientPresentation& q);

struct AnalysisOptions {
    SystemParams params;
    long long guard = default_hom_guard();
    bool with_certificate = false;
    std::optional<Graph> target;  // no-homomorphism test target
};

// Full pipeline: bipartite short-circuit, group, system, verdict, optional
// certificate and no-homomorphism proof.
AnalysisReport run_analysis(const Graph& h, const std::vector<ValuedDigraph>& dset,
                            const AnalysisOptions& opts = {});

}  // namespace sigsys
