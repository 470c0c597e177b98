#include "sigsys/valued_digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sigsys {

BuiltinDigraph parse_builtin_digraph(const std::string& name) {
    if (name == "d1" || name == "D1") return BuiltinDigraph::d1;
    if (name == "d2" || name == "D2") return BuiltinDigraph::d2;
    if (name == "d3" || name == "D3") return BuiltinDigraph::d3;
    throw std::invalid_argument("unknown built-in valued digraph: " + name);
}

ValuedDigraph builtin(BuiltinDigraph which) {
    switch (which) {
        case BuiltinDigraph::d1:
            // 4-cycle a-b-c-d oriented towards b and d: images give the
            // relation (u,v) - (w,v) + (w,x) - (u,x)
            return {4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}}, {1, -1, 1, -1}, "d1"};
        case BuiltinDigraph::d2:
            // directed 4-cycle; collapsing on an edge gives 2((u,v) + (v,u))
            return {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 1, 1, 1}, "d2"};
        case BuiltinDigraph::d3:
            // triangle with one zero-valued arc keeping the image a triangle;
            // relates the two valued arcs: e1 + e2 = 0
            return {3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 0}, "d3"};
    }
    throw std::invalid_argument("unknown built-in valued digraph");
}

RelationSet relations_from(const ValuedDigraph& d, const Graph& h, const ArcTable& arcs,
                           long long guard) {
    if (d.arcs.size() != d.values.size())
        throw std::invalid_argument("valued digraph arc/value count mismatch");
    auto images = enumerate_constrained_maps(d.n, d.arcs, h, guard);
    RelationSet out;
    out.arc_count = arcs.size();
    for (const auto& f : images) {
        std::vector<long long> rel(arcs.size(), 0);
        for (size_t k = 0; k < d.arcs.size(); ++k) {
            if (d.values[k] == 0) continue;
            auto [u, v] = d.arcs[k];
            int a = arcs.index(f[u], f[v]);
            rel[a] += d.values[k];
        }
        if (std::all_of(rel.begin(), rel.end(), [](long long x) { return x == 0; })) continue;
        out.relations.push_back(std::move(rel));
    }
    std::sort(out.relations.begin(), out.relations.end());
    out.relations.erase(std::unique(out.relations.begin(), out.relations.end()),
                        out.relations.end());
    return out;
}

RelationSet theta(const std::vector<ValuedDigraph>& dset, const Graph& h,
                  const ArcTable& arcs, long long guard) {
    RelationSet out;
    out.arc_count = arcs.size();
    for (const auto& d : dset) {
        RelationSet part = relations_from(d, h, arcs, guard);
        out.relations.insert(out.relations.end(), part.relations.begin(),
                             part.relations.end());
    }
    std::sort(out.relations.begin(), out.relations.end());
    out.relations.erase(std::unique(out.relations.begin(), out.relations.end()),
                        out.relations.end());
    return out;
}

ValuedDigraph odd_cycle_digraph(const Graph& h) {
    std::vector<int> cycle = shortest_odd_cycle(h);
    if (cycle.empty()) throw std::invalid_argument("graph is bipartite, no odd cycle");
    ValuedDigraph d;
    d.n = h.vertex_count();
    d.name = "wtd";
    ArcTable arcs(h);
    std::vector<long long> value_of(arcs.size(), 0);
    int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i) {
        int u = cycle[i], v = cycle[(i + 1) % len];
        value_of[arcs.index(u, v)] = 1;
        value_of[arcs.index(v, u)] = -1;
    }
    for (int i = 0; i < arcs.size(); ++i) {
        d.arcs.push_back(arcs.arc(i));
        d.values.push_back(value_of[i]);
    }
    return d;
}

ValuedDigraph read_valued_digraph(std::istream& in) {
    ValuedDigraph d;
    d.name = "custom";
    d.n = -1;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (tok == "p") {
            if (!(ls >> d.n) || d.n < 0) throw std::invalid_argument("bad problem line");
        } else if (tok == "a") {
            int u, v;
            long long val;
            if (!(ls >> u >> v >> val)) throw std::invalid_argument("bad arc line: " + line);
            if (u < 0 || v < 0 || u >= d.n || v >= d.n)
                throw std::invalid_argument("arc endpoint out of range");
            d.arcs.emplace_back(u, v);
            d.values.push_back(val);
        } else {
            throw std::invalid_argument("unrecognised line: " + line);
        }
    }
    if (d.n < 0) throw std::invalid_argument("missing problem line");
    return d;
}

ValuedDigraph read_valued_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_valued_digraph(in);
}

void write_valued_digraph(std::ostream& out, const ValuedDigraph& d) {
    out << "p " << d.n << "\n";
    for (size_t i = 0; i < d.arcs.size(); ++i)
        out << "a " << d.arcs[i].first << " " << d.arcs[i].second << " " << d.values[i]
            << "\n";
}

}  // namespace sigsys
