#include "sigsys/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace sigsys {

namespace {

void check_cycle_len(int cycle_len) {
    if (cycle_len < 3 || cycle_len % 2 == 0)
        throw std::invalid_argument("cycle length must be odd and at least 3");
}

long long space_size(int host_size, int cycle_len, long long guard) {
    long long space = 1;
    for (int i = 0; i < cycle_len; ++i) {
        if (host_size > 0 && space > guard / host_size)
            throw GuardExceeded("exponential graph exceeds guard of " + std::to_string(guard));
        space *= host_size;
    }
    return space;
}

}  // namespace

std::uint64_t encode_exp_vertex(const ExpVertex& f, int host_size) {
    std::uint64_t code = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it)
        code = code * static_cast<std::uint64_t>(host_size) + static_cast<std::uint64_t>(*it);
    return code;
}

ExpVertex decode_exp_vertex(std::uint64_t code, int host_size, int cycle_len) {
    ExpVertex f(cycle_len);
    for (int i = 0; i < cycle_len; ++i) {
        f[i] = static_cast<int>(code % static_cast<std::uint64_t>(host_size));
        code /= static_cast<std::uint64_t>(host_size);
    }
    return f;
}

bool exp_adjacent(const Graph& h, int cycle_len, const ExpVertex& f, const ExpVertex& g) {
    check_cycle_len(cycle_len);
    if (static_cast<int>(f.size()) != cycle_len || static_cast<int>(g.size()) != cycle_len)
        throw std::invalid_argument("function length does not match cycle length");
    for (int i = 0; i < cycle_len; ++i) {
        int j = (i + 1) % cycle_len;
        if (!h.has_edge(f[i], g[j])) return false;
        if (!h.has_edge(f[j], g[i])) return false;
    }
    return true;
}

namespace {

// Neighbours of f in H^C, coordinate-wise: g(i) must be adjacent to both
// f(i-1) and f(i+1).
template <typename Visit>
void for_each_neighbour(const Graph& h, int cycle_len, const ExpVertex& f, Visit&& visit) {
    std::vector<std::vector<int>> cand(cycle_len);
    for (int i = 0; i < cycle_len; ++i) {
        int prev = f[(i + cycle_len - 1) % cycle_len];
        int next = f[(i + 1) % cycle_len];
        const auto& a = h.neighbours(prev);
        const auto& b = h.neighbours(next);
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(cand[i]));
        if (cand[i].empty()) return;
    }
    ExpVertex g(cycle_len);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == cycle_len) {
            visit(g);
            return;
        }
        for (int x : cand[pos]) {
            g[pos] = x;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
}

bool is_loop(const Graph& h, int cycle_len, const ExpVertex& f) {
    for (int i = 0; i < cycle_len; ++i)
        if (!h.has_edge(f[i], f[(i + 1) % cycle_len])) return false;
    return true;
}

}  // namespace

ConstantComponent component_of_constants(const Graph& h, int cycle_len, long long guard) {
    check_cycle_len(cycle_len);
    int hn = h.vertex_count();
    space_size(hn, cycle_len, guard);
    ConstantComponent out;
    out.cycle_len = cycle_len;
    std::unordered_set<std::uint64_t> seen;
    std::deque<ExpVertex> queue;
    for (int u = 0; u < hn; ++u) {
        ExpVertex f(cycle_len, u);
        if (seen.insert(encode_exp_vertex(f, hn)).second) queue.push_back(std::move(f));
    }
    while (!queue.empty()) {
        ExpVertex f = std::move(queue.front());
        queue.pop_front();
        if (is_loop(h, cycle_len, f)) out.loops.push_back(f);
        for_each_neighbour(h, cycle_len, f, [&](const ExpVertex& g) {
            if (seen.insert(encode_exp_vertex(g, hn)).second) queue.push_back(g);
        });
    }
    out.members.assign(seen.begin(), seen.end());
    std::sort(out.members.begin(), out.members.end());
    std::sort(out.loops.begin(), out.loops.end());
    return out;
}

FreeWord free_reduce(FreeWord w) {
    FreeWord out;
    for (auto [arc, exp] : w) {
        if (!out.empty() && out.back().first == arc && out.back().second == -exp)
            out.pop_back();
        else
            out.emplace_back(arc, exp);
    }
    return out;
}

FreeWord free_signature(const Graph& h, const ArcTable& arcs, int cycle_len,
                        const ExpVertex& f, const ExpVertex& g) {
    if (!exp_adjacent(h, cycle_len, f, g))
        throw std::invalid_argument("free_signature requires adjacent functions");
    FreeWord w;
    for (int i = 0; i < cycle_len; ++i) {
        int a = arcs.index(f[(2 * i) % cycle_len], g[(2 * i + 1) % cycle_len]);
        int b = arcs.index(f[(2 * i + 2) % cycle_len], g[(2 * i + 1) % cycle_len]);
        w.emplace_back(a, 1);
        w.emplace_back(b, -1);
    }
    return free_reduce(std::move(w));
}

std::vector<long long> abelianise(const FreeWord& w, int arc_count) {
    std::vector<long long> out(arc_count, 0);
    for (auto [arc, exp] : w) out[arc] += exp;
    return out;
}

VertexMap path_to_cone_hom(const Graph& h, int cycle_len,
                           const std::vector<ExpVertex>& path) {
    check_cycle_len(cycle_len);
    if (path.size() < 2) throw std::invalid_argument("path needs at least two functions");
    if (!exp_adjacent(h, cycle_len, path.front(), path.front()))
        throw std::invalid_argument("path must start at a loop");
    const ExpVertex& last = path.back();
    if (std::adjacent_find(last.begin(), last.end(), std::not_equal_to<int>()) != last.end())
        throw std::invalid_argument("path must end at a constant map");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!exp_adjacent(h, cycle_len, path[i], path[i + 1]))
            throw std::invalid_argument("consecutive path entries must be adjacent");
    int m = static_cast<int>(path.size()) - 1;
    Graph cone = mycielski_cone(gen_named(NamedGraph::cycle, cycle_len), m);
    std::vector<int> image(cone.vertex_count());
    for (int i = 0; i < m; ++i)
        for (int u = 0; u < cycle_len; ++u) image[i * cycle_len + u] = path[i][u];
    image[m * cycle_len] = last[0];
    return VertexMap{std::move(cone), h, std::move(image)};
}

std::vector<ExpVertex> loop_to_constant_path(const Graph& h, int cycle_len,
                                             long long guard) {
    check_cycle_len(cycle_len);
    int hn = h.vertex_count();
    space_size(hn, cycle_len, guard);
    std::unordered_map<std::uint64_t, std::uint64_t> parent;
    std::deque<ExpVertex> queue;
    for (int u = 0; u < hn; ++u) {
        ExpVertex f(cycle_len, u);
        std::uint64_t code = encode_exp_vertex(f, hn);
        if (parent.emplace(code, code).second) queue.push_back(std::move(f));
    }
    while (!queue.empty()) {
        ExpVertex f = std::move(queue.front());
        queue.pop_front();
        std::uint64_t fc = encode_exp_vertex(f, hn);
        if (is_loop(h, cycle_len, f)) {
            std::vector<ExpVertex> rev{f};
            std::uint64_t cur = fc;
            while (parent[cur] != cur) {
                cur = parent[cur];
                rev.push_back(decode_exp_vertex(cur, hn, cycle_len));
            }
            return rev;  // loop first, constant last
        }
        for_each_neighbour(h, cycle_len, f, [&](const ExpVertex& g) {
            std::uint64_t gc = encode_exp_vertex(g, hn);
            if (parent.emplace(gc, fc).second) queue.push_back(g);
        });
    }
    return {};
}

}  // namespace sigsys
