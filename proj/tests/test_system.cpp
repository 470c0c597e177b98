#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "sigsys/system.hpp"

using namespace sigsys;

namespace {

std::vector<ValuedDigraph> d1set() { return {builtin(BuiltinDigraph::d1)}; }
std::vector<ValuedDigraph> d23set() {
    return {builtin(BuiltinDigraph::d2), builtin(BuiltinDigraph::d3)};
}

}  // namespace

TEST_CASE("system shapes") {
    SignatureSystem k4 = build_system(gen_named(NamedGraph::complete, 4), d1set());
    CHECK(k4.group.free_rank() == 7);
    CHECK(k4.a.cols() == 13);  // 12 arcs + N
    CHECK(k4.a.rows() == 12);  // 4 flow + 1 parity + 7 free signature

    SignatureSystem c7 = build_system(gen_named(NamedGraph::cycle, 7), d1set());
    CHECK(c7.a.cols() == 15);
    CHECK(c7.a.rows() == 22);

    SignatureSystem k3 = build_system(gen_named(NamedGraph::complete, 3), d23set());
    int torsion_rows = 0;
    for (const auto& role : k3.constraint_roles)
        if (role.starts_with("signature-torsion")) ++torsion_rows;
    CHECK(torsion_rows == 2);
    CHECK(k3.variable_roles.back() == "k2");
    CHECK(k3.group.invariant_factors() == std::vector<Int>{2, 2});

    CHECK_THROWS_AS(build_system(gen_named(NamedGraph::looped_path, 2), d1set()),
                    std::invalid_argument);
    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(build_system(disconnected, d1set()), std::invalid_argument);
    Graph empty_edges(3, {});
    CHECK_THROWS_AS(build_system(empty_edges, d1set()), std::invalid_argument);
}

TEST_CASE("feasibility of the paper examples") {
    SignatureSystem k4 = build_system(gen_named(NamedGraph::complete, 4), d1set());
    auto k4sol = solve_system(k4);
    REQUIRE(k4sol.has_value());
    CHECK(check_solution(k4, *k4sol));
    // the triangle assignment is a solution too
    SystemSolution tri;
    tri.arc_values.assign(k4.arc_vars(), 0);
    tri.arc_values[k4.arcs.index(0, 1)] = 1;
    tri.arc_values[k4.arcs.index(1, 2)] = 1;
    tri.arc_values[k4.arcs.index(2, 0)] = 1;
    tri.n = 1;
    CHECK(check_solution(k4, tri));

    CHECK_FALSE(solve_system(build_system(gen_named(NamedGraph::cycle, 7), d1set())));
    CHECK_FALSE(solve_system(build_system(gen_named(NamedGraph::c7_power3), d1set())));
    CHECK_FALSE(solve_system(build_system(gen_named(NamedGraph::complete, 3), d1set())));

    // with D2,D3 the chordal C7 becomes feasible while K3 stays infeasible
    SignatureSystem c7p3 = build_system(gen_named(NamedGraph::c7_power3), d23set());
    CHECK(c7p3.group.free_rank() == 0);
    CHECK(c7p3.group.invariant_factors() == std::vector<Int>{2});
    CHECK(solve_system(c7p3).has_value());
    CHECK_FALSE(solve_system(build_system(gen_named(NamedGraph::complete, 3), d23set())));
}

TEST_CASE("certificates") {
    SignatureSystem k4 = build_system(gen_named(NamedGraph::complete, 4), d1set());
    SystemSolution tri;
    tri.arc_values.assign(k4.arc_vars(), 0);
    tri.arc_values[k4.arcs.index(0, 1)] = 1;
    tri.arc_values[k4.arcs.index(1, 2)] = 1;
    tri.arc_values[k4.arcs.index(2, 0)] = 1;
    tri.n = 1;
    WalkCertificate w = extract_certificate(k4, tri);
    CHECK(w.walk == std::vector<int>{0, 1, 2});
    CHECK(verify_certificate(k4.host, k4.arcs, k4.group, w));

    // solver-produced solution round-trips as well
    auto sol = solve_system(k4);
    REQUIRE(sol.has_value());
    WalkCertificate w2 = extract_certificate(k4, *sol);
    CHECK(w2.length() % 2 == 1);
    CHECK(verify_certificate(k4.host, k4.arcs, k4.group, w2));

    // C7 walk around the cycle has nonzero free signature
    Graph c7 = gen_named(NamedGraph::cycle, 7);
    ArcTable c7a(c7);
    QuotientPresentation free_q = quotient(c7a.size(), {});
    WalkCertificate around{{0, 1, 2, 3, 4, 5, 6}};
    CHECK_FALSE(verify_certificate(c7, c7a, free_q, around));
    GroupElement sig = walk_signature(c7, c7a, free_q, around);
    // trivial quotient: the projection is the identity, +1 forward, -1 back
    for (int i = 0; i < 7; ++i) {
        CHECK(sig.free_part[c7a.index(i, (i + 1) % 7)] == 1);
        CHECK(sig.free_part[c7a.index((i + 1) % 7, i)] == -1);
    }
    // even walks are rejected
    WalkCertificate even{{0, 1, 0, 1}};
    CHECK_FALSE(verify_certificate(c7, c7a, free_q, even));
    // empty walks are rejected
    CHECK_THROWS_AS(walk_signature(c7, c7a, free_q, WalkCertificate{{}}),
                    std::invalid_argument);
}

TEST_CASE("certificate inflation on disconnected support") {
    // C7^3 with D2,D3 has a trivial signature constraint, so the disjoint
    // triangle 0,1,4 plus directed 4-cycle 2,3,6,5 solves the system
    Graph h = gen_named(NamedGraph::c7_power3);
    SignatureSystem s = build_system(h, d23set());
    SystemSolution sol;
    sol.arc_values.assign(s.arc_vars(), 0);
    auto bump = [&](int u, int v) { sol.arc_values[s.arcs.index(u, v)] += 1; };
    bump(0, 1);
    bump(1, 4);
    bump(4, 0);
    bump(2, 3);
    bump(3, 6);
    bump(6, 5);
    bump(5, 2);
    sol.n = 3;
    // solve the single torsion row for its auxiliary
    int trow = s.a.rows() - 1;
    Int residual = 0;
    for (int j = 0; j < s.arc_vars(); ++j) residual += s.a.at(trow, j) * sol.arc_values[j];
    REQUIRE(residual % s.group.invariant_factors()[0] == 0);
    sol.torsion_aux.assign(1, residual / s.group.invariant_factors()[0]);
    REQUIRE(check_solution(s, sol));
    WalkCertificate w = extract_certificate(s, sol);
    CHECK(w.length() == 7 + 2 * h.edge_count());  // inflation adds one traversal per arc
    CHECK(verify_certificate(h, s.arcs, s.group, w));
}

TEST_CASE("push solution") {
    SignatureSystem k4 = build_system(gen_named(NamedGraph::complete, 4), d1set());
    auto sol = solve_system(k4);
    REQUIRE(sol.has_value());
    VertexMap id{k4.host, k4.host, {0, 1, 2, 3}};
    SystemSolution same = push_solution(k4, k4, id, *sol);
    CHECK(same.arc_values == sol->arc_values);
    CHECK(same.n == sol->n);
    CHECK(check_solution(k4, same));

    // Grotzsch graph onto K4 via a greedy proper colouring
    Graph grotzsch = mycielski_cone(gen_named(NamedGraph::cycle, 5), 2);
    SignatureSystem gs = build_system(grotzsch, d1set());
    auto gsol = solve_system(gs);
    REQUIRE(gsol.has_value());
    std::vector<int> colour(grotzsch.vertex_count(), -1);
    for (int u = 0; u < grotzsch.vertex_count(); ++u) {
        std::vector<char> used(4, 0);
        for (int v : grotzsch.neighbours(u))
            if (colour[v] >= 0) used[colour[v]] = 1;
        int c = 0;
        while (used[c]) ++c;
        REQUIRE(c < 4);
        colour[u] = c;
    }
    VertexMap psi{grotzsch, k4.host, colour};
    REQUIRE(psi.is_homomorphism());
    SystemSolution pushed = push_solution(gs, k4, psi, *gsol);
    CHECK(check_solution(k4, pushed));

    // the C9 -> C3 pattern map transports flow and parity values
    Graph c9 = gen_named(NamedGraph::cycle, 9);
    Graph c3 = gen_named(NamedGraph::cycle, 3);
    ArcTable c9a(c9), c3a(c3);
    std::vector<int> pattern{0, 1, 0, 1, 2, 1, 2, 0, 2};
    VertexMap f{c9, c3, pattern};
    REQUIRE(f.is_homomorphism());
    std::vector<Int> counts(c3a.size(), 0);
    for (int i = 0; i < 9; ++i)
        counts[c3a.index(pattern[i], pattern[(i + 1) % 9])] += 1;
    // flow at each C3 vertex balances and the total is odd
    for (int u = 0; u < 3; ++u) {
        Int flow = 0;
        for (int v : c3.neighbours(u))
            flow += counts[c3a.index(u, v)] - counts[c3a.index(v, u)];
        CHECK(flow == 0);
    }
    Int total = 0;
    for (const Int& c : counts) total += c;
    CHECK(total == 9);

    VertexMap bad{k4.host, k4.host, {0, 0, 0, 0}};
    CHECK_THROWS_AS(push_solution(k4, k4, bad, *sol), std::invalid_argument);
}

TEST_CASE("no hom test") {
    Graph k4 = gen_named(NamedGraph::complete, 4);
    Graph k3 = gen_named(NamedGraph::complete, 3);
    Graph c5 = gen_named(NamedGraph::cycle, 5);
    Graph c7p3 = gen_named(NamedGraph::c7_power3);

    auto proof = no_hom_test(k4, k3, d1set());
    REQUIRE(proof.has_value());
    SignatureSystem sys = build_system(k4, d1set());
    CHECK(check_solution(sys, proof->source_solution));

    CHECK(no_hom_test(c7p3, k3, d23set()).has_value());
    CHECK_FALSE(no_hom_test(c5, k3, d1set()).has_value());
}

TEST_CASE("verdicts") {
    SignatureSystem c7 = build_system(gen_named(NamedGraph::cycle, 7), d1set());
    Verdict v1 = make_verdict(c7, false, std::nullopt);
    CHECK(v1.conclusions == std::vector<std::string>{"coind_le_3"});

    SignatureSystem k4 = build_system(gen_named(NamedGraph::complete, 4), d1set());
    Verdict v2 = make_verdict(k4, true, false);
    CHECK(v2.conclusions == std::vector<std::string>{"chi_ge_4"});

    SignatureSystem c7p3 = build_system(gen_named(NamedGraph::c7_power3), d23set());
    Verdict v3 = make_verdict(c7p3, true, true);
    CHECK(v3.conclusions == std::vector<std::string>{"raw_feasibility_only"});
    Verdict v4 = make_verdict(c7p3, true, false, true);
    CHECK(std::find(v4.conclusions.begin(), v4.conclusions.end(), "no_hom_to_target") !=
          v4.conclusions.end());
    // infeasible with a generalised dset earns no coindex conclusion
    SignatureSystem k3d = build_system(gen_named(NamedGraph::complete, 3), d23set());
    Verdict v5 = make_verdict(k3d, false, std::nullopt);
    CHECK(v5.conclusions == std::vector<std::string>{"raw_feasibility_only"});
}

TEST_CASE("generalised parameters") {
    // defaults reproduce the original system on C7 (infeasible)
    Graph c7 = gen_named(NamedGraph::cycle, 7);
    CHECK_FALSE(solve_system(build_system(c7, d1set(), SystemParams{})));
    // an even parity right-hand side flips feasibility: X = 0, N = -q/2 works
    SystemParams even{1, -1, 2, 4};
    auto sol = solve_system(build_system(c7, d1set(), even));
    REQUIRE(sol.has_value());
    // and on K4 an even right-hand side keeps feasibility
    CHECK(solve_system(build_system(gen_named(NamedGraph::complete, 4), d1set(), even)));
}
