#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sigsys/graph.hpp"

namespace sigsys {

// Directed graph with an integer value per arc; its homomorphisms into a
// host graph stamp out relations on Z^{A(H)}.
struct ValuedDigraph {
    int n = 0;
    std::vector<std::pair<int, int>> arcs;
    std::vector<long long> values;
    std::string name;
};

enum class BuiltinDigraph { d1, d2, d3 };

BuiltinDigraph parse_builtin_digraph(const std::string& name);
ValuedDigraph builtin(BuiltinDigraph which);

// Relation vectors over Z^{A(H)}: deduplicated, sorted, zero vectors removed.
struct RelationSet {
    int arc_count = 0;
    std::vector<std::vector<long long>> relations;
};

RelationSet relations_from(const ValuedDigraph& d, const Graph& h, const ArcTable& arcs,
                           long long guard = default_hom_guard());

RelationSet theta(const std::vector<ValuedDigraph>& dset, const Graph& h,
                  const ArcTable& arcs, long long guard = default_hom_guard());

// (H, phi) with phi = +1 on the forward arcs of a shortest odd cycle of H,
// -1 on the backward arcs, 0 elsewhere. Throws on bipartite input.
ValuedDigraph odd_cycle_digraph(const Graph& h);

// Text format: "p <n>" then lines "a <u> <v> <value>".
ValuedDigraph read_valued_digraph(std::istream& in);
ValuedDigraph read_valued_digraph_file(const std::string& path);
void write_valued_digraph(std::ostream& out, const ValuedDigraph& d);

}  // namespace sigsys
