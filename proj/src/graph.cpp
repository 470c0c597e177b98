#include "sigsys/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace sigsys {

namespace {

long long guard_from_env(long long fallback) {
    const char* s = std::getenv("SIGSYS_GUARD");
    if (s == nullptr || *s == '\0') return fallback;
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end == s || v <= 0) return fallback;
    return v;
}

}  // namespace

long long default_hom_guard() { return guard_from_env(100000000LL); }
long long default_oracle_guard() { return guard_from_env(10000000LL); }

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edge_list,
             std::vector<std::string> vertex_labels)
    : n_(vertex_count), labels_(std::move(vertex_labels)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw std::invalid_argument("label count does not match vertex count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());
    edges_ = std::move(edge_list);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        if (u != v) adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool Graph::is_simple() const {
    for (auto [u, v] : edges_)
        if (u == v) return false;
    return true;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj_[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push_back(v);
            }
        }
    }
    return reached == n_;
}

ArcTable::ArcTable(const Graph& g) : n_(g.vertex_count()) {
    for (auto [u, v] : g.edges()) {
        arcs_.emplace_back(u, v);
        if (u != v) arcs_.emplace_back(v, u);
    }
    std::sort(arcs_.begin(), arcs_.end());
    lookup_.assign(static_cast<size_t>(n_) * n_, -1);
    for (int i = 0; i < static_cast<int>(arcs_.size()); ++i)
        lookup_[static_cast<size_t>(arcs_[i].first) * n_ + arcs_[i].second] = i;
    reverse_.resize(arcs_.size());
    for (int i = 0; i < static_cast<int>(arcs_.size()); ++i)
        reverse_[i] = index(arcs_[i].second, arcs_[i].first);
}

int ArcTable::index(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    return lookup_[static_cast<size_t>(u) * n_ + v];
}

bool VertexMap::is_homomorphism() const {
    if (static_cast<int>(image.size()) != source.vertex_count()) return false;
    for (int x : image)
        if (x < 0 || x >= target.vertex_count()) return false;
    for (auto [u, v] : source.edges())
        if (!target.has_edge(image[u], image[v])) return false;
    return true;
}

NamedGraph parse_named_graph(const std::string& name) {
    if (name == "cycle") return NamedGraph::cycle;
    if (name == "complete") return NamedGraph::complete;
    if (name == "looped_path") return NamedGraph::looped_path;
    if (name == "u53") return NamedGraph::u53;
    if (name == "c7_power3" || name == "c7p3") return NamedGraph::c7_power3;
    throw std::invalid_argument("unknown graph name: " + name);
}

Graph gen_named(NamedGraph name, int n) {
    switch (name) {
        case NamedGraph::cycle: {
            if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
            return Graph(n, std::move(e));
        }
        case NamedGraph::complete: {
            if (n < 1) throw std::invalid_argument("complete needs n >= 1");
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
            return Graph(n, std::move(e));
        }
        case NamedGraph::looped_path: {
            if (n < 1) throw std::invalid_argument("looped_path needs n >= 1");
            std::vector<std::pair<int, int>> e{{0, 0}};
            for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
            return Graph(n + 1, std::move(e));
        }
        case NamedGraph::u53: {
            // Vertices (i,{j,k}) with i,j,k in {1..5}, i not in {j,k};
            // (i,{j,k}) ~ (i',{j',k'}) iff i in {j',k'} and i' in {j,k}.
            struct V {
                int i, j, k;
            };
            std::vector<V> verts;
            std::vector<std::string> labels;
            for (int i = 1; i <= 5; ++i)
                for (int j = 1; j <= 5; ++j)
                    for (int k = j + 1; k <= 5; ++k) {
                        if (i == j || i == k) continue;
                        verts.push_back({i, j, k});
                        labels.push_back("(" + std::to_string(i) + ",{" +
                                         std::to_string(j) + "," + std::to_string(k) + "})");
                    }
            std::vector<std::pair<int, int>> e;
            for (int a = 0; a < static_cast<int>(verts.size()); ++a)
                for (int b = a + 1; b < static_cast<int>(verts.size()); ++b) {
                    const V& x = verts[a];
                    const V& y = verts[b];
                    if ((x.i == y.j || x.i == y.k) && (y.i == x.j || y.i == x.k))
                        e.emplace_back(a, b);
                }
            return Graph(static_cast<int>(verts.size()), std::move(e), std::move(labels));
        }
        case NamedGraph::c7_power3: {
            std::vector<std::pair<int, int>> e;
            for (int i = 0; i < 7; ++i) {
                e.emplace_back(i, (i + 1) % 7);
                e.emplace_back(i, (i + 3) % 7);
            }
            return Graph(7, std::move(e));
        }
    }
    throw std::invalid_argument("unknown graph name");
}

Graph categorical_product(const Graph& g, const Graph& g2) {
    int n2 = g2.vertex_count();
    auto vid = [n2](int u, int u2) { return u * n2 + u2; };
    std::vector<std::pair<int, int>> arcs1, arcs2;
    for (auto [u, v] : g.edges()) {
        arcs1.emplace_back(u, v);
        if (u != v) arcs1.emplace_back(v, u);
    }
    for (auto [u, v] : g2.edges()) {
        arcs2.emplace_back(u, v);
        if (u != v) arcs2.emplace_back(v, u);
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : arcs1)
        for (auto [u2, v2] : arcs2) e.emplace_back(vid(u, u2), vid(v, v2));
    return Graph(g.vertex_count() * n2, std::move(e));
}

Graph mycielski_cone(const Graph& g, int n) {
    if (n < 1) throw std::invalid_argument("mycielski_cone needs n >= 1");
    if (!g.is_simple()) throw std::invalid_argument("mycielski_cone needs a loopless base");
    int base = g.vertex_count();
    int apex = n * base;
    auto vid = [&](int u, int level) { return level < n ? level * base + u : apex; };
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) {
        // level 0 carries the loop of P_n
        e.emplace_back(vid(u, 0), vid(v, 0));
        for (int i = 0; i < n; ++i) {
            e.emplace_back(vid(u, i), vid(v, i + 1));
            e.emplace_back(vid(v, i), vid(u, i + 1));
        }
    }
    return Graph(apex + 1, std::move(e));
}

std::vector<std::vector<int>> enumerate_constrained_maps(
    int dom_size, const std::vector<std::pair<int, int>>& constraints,
    const Graph& h, long long guard) {
    int hn = h.vertex_count();
    if (dom_size > 0) {
        long long space = 1;
        for (int i = 0; i < dom_size; ++i) {
            if (space > guard / std::max(hn, 1)) {
                if (hn > 1)
                    throw GuardExceeded("homomorphism search space exceeds guard of " +
                                        std::to_string(guard));
            }
            space *= std::max(hn, 1);
            if (space > guard)
                throw GuardExceeded("homomorphism search space exceeds guard of " +
                                    std::to_string(guard));
        }
    }
    // constraints grouped by the larger endpoint so each is checked as soon
    // as both images are assigned
    std::vector<std::vector<std::pair<int, int>>> by_last(dom_size);
    for (auto [u, v] : constraints) {
        if (u < 0 || v < 0 || u >= dom_size || v >= dom_size)
            throw std::invalid_argument("constraint endpoint out of range");
        by_last[std::max(u, v)].emplace_back(u, v);
    }
    std::vector<std::vector<int>> out;
    std::vector<int> img(dom_size, -1);
    auto arc_ok = [&h](int a, int b) { return h.has_edge(a, b); };
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == dom_size) {
            out.push_back(img);
            return;
        }
        for (int x = 0; x < hn; ++x) {
            img[pos] = x;
            bool ok = true;
            for (auto [u, v] : by_last[pos]) {
                if (!arc_ok(img[u], img[v])) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, pos + 1);
        }
        img[pos] = -1;
    };
    rec(rec, 0);
    return out;
}

std::vector<VertexMap> enumerate_homs(const Graph& d, const Graph& h, long long guard) {
    std::vector<std::pair<int, int>> cons;
    for (auto [u, v] : d.edges()) {
        cons.emplace_back(u, v);
        if (u != v) cons.emplace_back(v, u);
    }
    auto images = enumerate_constrained_maps(d.vertex_count(), cons, h, guard);
    std::vector<VertexMap> out;
    out.reserve(images.size());
    for (auto& img : images) out.push_back(VertexMap{d, h, std::move(img)});
    return out;
}

bool is_bipartite(const Graph& g) {
    if (!g.is_simple()) return false;
    int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (int s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbours(u)) {
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

long long count_4cycles(const Graph& g) {
    if (!g.is_simple()) throw std::invalid_argument("count_4cycles needs a simple graph");
    int n = g.vertex_count();
    // each 4-cycle is counted once per diagonal pair, i.e. twice
    long long twice = 0;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) {
            long long common = 0;
            const auto& a = g.neighbours(u);
            const auto& b = g.neighbours(w);
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j])
                    ++i;
                else if (a[i] > b[j])
                    ++j;
                else {
                    ++common;
                    ++i;
                    ++j;
                }
            }
            twice += common * (common - 1) / 2;
        }
    return twice / 2;
}

std::vector<int> shortest_odd_cycle(const Graph& g) {
    // BFS in the bipartite double cover: a shortest path from (s,0) to (s,1)
    // is a shortest odd closed walk through s, and a shortest odd closed walk
    // overall is a cycle.
    int n = g.vertex_count();
    for (auto [u, v] : g.edges())
        if (u == v) return {u};
    std::vector<int> best;
    for (int s = 0; s < n; ++s) {
        std::vector<std::array<int, 2>> dist(n, {-1, -1});
        std::vector<std::array<int, 2>> parent(n, {-1, -1});
        std::deque<std::pair<int, int>> queue{{s, 0}};
        dist[s][0] = 0;
        while (!queue.empty()) {
            auto [u, p] = queue.front();
            queue.pop_front();
            for (int v : g.neighbours(u)) {
                int q = 1 - p;
                if (dist[v][q] == -1) {
                    dist[v][q] = dist[u][p] + 1;
                    parent[v][q] = u;
                    queue.push_back({v, q});
                }
            }
        }
        if (dist[s][1] == -1) continue;
        if (!best.empty() && dist[s][1] >= static_cast<int>(best.size())) continue;
        std::vector<int> walk;
        int u = s, p = 1;
        while (!(u == s && p == 0 && !walk.empty())) {
            walk.push_back(u);
            int pu = parent[u][p];
            u = pu;
            p = 1 - p;
            if (static_cast<int>(walk.size()) > dist[s][1] + 1) break;
        }
        // walk holds s = w_L, ..., w_1; closed walk of odd length dist[s][1]
        std::reverse(walk.begin(), walk.end());
        best = std::move(walk);
    }
    return best;
}

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    bool dimacs = false;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "#" || tok[0] == '#' || tok == "c") continue;
        if (tok == "p") {
            std::string second;
            ls >> second;
            if (second == "edge" || second == "col") {
                dimacs = true;
                if (!(ls >> n)) throw std::invalid_argument("bad DIMACS problem line");
            } else {
                n = std::stoi(second);
            }
            if (n < 0) throw std::invalid_argument("bad vertex count");
        } else if (tok == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw std::invalid_argument("bad edge line: " + line);
            if (dimacs) {
                --u;
                --v;
            }
            edges.emplace_back(u, v);
        } else {
            throw std::invalid_argument("unrecognised line: " + line);
        }
    }
    if (n < 0) throw std::invalid_argument("missing problem line");
    return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path);
    write_graph(out, g);
}

}  // namespace sigsys
