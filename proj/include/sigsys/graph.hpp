#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sigsys {

// Thrown when an enumeration would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
public:
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

long long default_hom_guard();     // candidate bound for homomorphism search
long long default_oracle_guard();  // bound on |V(H)|^|V(C)| in the oracle
// Both honour the SIGSYS_GUARD environment variable when set.

// Finite undirected graph, loops allowed as edge {u,u}.
// Vertices are 0-indexed; labels are decorative.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
          std::vector<std::string> vertex_labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<int>& neighbours(int u) const { return adj_[u]; }

    bool has_edge(int u, int v) const;
    bool is_simple() const;  // no loops
    bool connected() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // normalised u <= v, sorted, unique
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> adj_;
};

// Canonical arc table: the two arcs (u,v),(v,u) per non-loop edge, one arc
// (u,u) per loop, in lexicographic order. Fixes the coordinate basis of
// Z^{A(H)}.
class ArcTable {
public:
    explicit ArcTable(const Graph& g);

    int size() const { return static_cast<int>(arcs_.size()); }
    const std::pair<int, int>& arc(int i) const { return arcs_[i]; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int index(int u, int v) const;  // -1 when (u,v) is not an arc
    int reverse(int i) const { return reverse_[i]; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<int> lookup_;  // flat n*n, -1 absent
    std::vector<int> reverse_;
};

// Map between vertex sets of two graphs.
struct VertexMap {
    Graph source;
    Graph target;
    std::vector<int> image;

    bool is_homomorphism() const;  // every source edge maps to a target edge
};

enum class NamedGraph { cycle, complete, looped_path, u53, c7_power3 };

NamedGraph parse_named_graph(const std::string& name);
Graph gen_named(NamedGraph name, int n = 0);

// (u,u') is vertex u * |V(G2)| + u'.
Graph categorical_product(const Graph& g, const Graph& g2);

// n-th cone (G x P_n) / ~_n. Vertex (u,i) is i*|V(G)|+u for i < n; the apex
// (the class of level n) is n*|V(G)|. Parallel edges created by the
// identification are deduplicated.
Graph mycielski_cone(const Graph& g, int n);

// All adjacency-preserving maps D -> H in lexicographic order of image
// sequences. Throws GuardExceeded when |V(H)|^|V(D)| exceeds the guard.
std::vector<VertexMap> enumerate_homs(const Graph& d, const Graph& h,
                                      long long guard = default_hom_guard());

// Backtracking core shared with digraph homomorphism search: a map
// f: {0..dom_size-1} -> V(H) subject to "(f(u),f(v)) is an arc of H" for
// every listed constraint, H viewed as a symmetric digraph.
std::vector<std::vector<int>> enumerate_constrained_maps(
    int dom_size, const std::vector<std::pair<int, int>>& constraints,
    const Graph& h, long long guard);

bool is_bipartite(const Graph& g);

// 4-cycles counted up to the 8 symmetries of the cyclic sequence.
long long count_4cycles(const Graph& g);

// Shortest odd cycle as a vertex sequence; empty when bipartite.
std::vector<int> shortest_odd_cycle(const Graph& g);

// Text format: '#' comments, "p <n>", "e <u> <v>" 0-indexed.
// DIMACS ("c" comments, "p edge n m", 1-indexed "e") accepted on read.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace sigsys
