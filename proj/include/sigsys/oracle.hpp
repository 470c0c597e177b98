#pragma once

#include <cstdint>
#include <vector>

#include "sigsys/graph.hpp"

namespace sigsys {

// Brute-force machinery over the exponential graph H^C for an odd cycle C.
// Vertices of H^C are functions V(C) -> V(H), stored as plain int vectors
// and encoded as mixed-radix integers for set membership.

using ExpVertex = std::vector<int>;

std::uint64_t encode_exp_vertex(const ExpVertex& f, int host_size);
ExpVertex decode_exp_vertex(std::uint64_t code, int host_size, int cycle_len);

// Adjacency in H^C: [f(u), g(v)] is an edge of H for every edge [u,v] of C.
// exp_adjacent(f,f) holds iff f is a homomorphism C -> H.
bool exp_adjacent(const Graph& h, int cycle_len, const ExpVertex& f, const ExpVertex& g);

struct ConstantComponent {
    int cycle_len = 0;
    std::vector<std::uint64_t> members;  // encoded, sorted
    std::vector<ExpVertex> loops;        // members that are homomorphisms
};

// BFS closure of the constant maps under exp_adjacent. Throws GuardExceeded
// when |V(H)|^cycle_len exceeds the guard.
ConstantComponent component_of_constants(const Graph& h, int cycle_len,
                                         long long guard = default_oracle_guard());

// Freely reduced word over the arcs of H; letters are (arc index, +-1).
using FreeWord = std::vector<std::pair<int, int>>;

FreeWord free_reduce(FreeWord w);

// The product over i of (f(2i), g(2i+1)) * (f(2i+2), g(2i+1))^{-1}, indices
// mod the cycle length, developed left to right and freely reduced.
FreeWord free_signature(const Graph& h, const ArcTable& arcs, int cycle_len,
                        const ExpVertex& f, const ExpVertex& g);

// Exponent sum per arc; equals the traversal-count vector of the closed walk
// generated by f when f is a loop.
std::vector<long long> abelianise(const FreeWord& w, int arc_count);

// Path p_0, ..., p_m in H^C with p_0 a loop and p_m constant, turned into the
// homomorphism M_m(C) -> H with (u,i) -> p_i(u) and apex -> p_m(0). The cone
// uses the mycielski_cone vertex numbering.
VertexMap path_to_cone_hom(const Graph& h, int cycle_len,
                           const std::vector<ExpVertex>& path);

// Shortest path from any loop of the component to a constant map, as a list
// of exponential-graph vertices; empty when the component has no loop.
std::vector<ExpVertex> loop_to_constant_path(const Graph& h, int cycle_len,
                                             long long guard = default_oracle_guard());

}  // namespace sigsys
