#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "sigsys/exact.hpp"
#include "sigsys/valued_digraph.hpp"

using namespace sigsys;

namespace {

std::vector<long long> unit(int size, std::initializer_list<std::pair<int, long long>> entries) {
    std::vector<long long> v(size, 0);
    for (auto [i, x] : entries) v[i] += x;
    return v;
}

bool contains(const RelationSet& r, const std::vector<long long>& v) {
    return std::find(r.relations.begin(), r.relations.end(), v) != r.relations.end();
}

}  // namespace

TEST_CASE("builtin digraphs") {
    ValuedDigraph d1 = builtin(BuiltinDigraph::d1);
    CHECK(d1.n == 4);
    CHECK(d1.arcs.size() == 4);
    ValuedDigraph d2 = builtin(BuiltinDigraph::d2);
    CHECK(d2.values == std::vector<long long>{1, 1, 1, 1});
    ValuedDigraph d3 = builtin(BuiltinDigraph::d3);
    CHECK(d3.n == 3);
    CHECK(d3.values == std::vector<long long>{1, 1, 0});
    CHECK(parse_builtin_digraph("d2") == BuiltinDigraph::d2);
    CHECK_THROWS_AS(parse_builtin_digraph("d9"), std::invalid_argument);
}

TEST_CASE("d1 relations") {
    Graph k3 = gen_named(NamedGraph::complete, 3);
    ArcTable k3a(k3);
    RelationSet r = relations_from(builtin(BuiltinDigraph::d1), k3, k3a);
    CHECK(r.relations.empty());  // K3 has no 4-cycles

    Graph c4 = gen_named(NamedGraph::cycle, 4);
    ArcTable c4a(c4);
    RelationSet rc4 = relations_from(builtin(BuiltinDigraph::d1), c4, c4a);
    // 4-cycle 0,1,2,3: (0,1) - (2,1) + (2,3) - (0,3)
    CHECK(contains(rc4, unit(c4a.size(), {{c4a.index(0, 1), 1},
                                          {c4a.index(2, 1), -1},
                                          {c4a.index(2, 3), 1},
                                          {c4a.index(0, 3), -1}})));
    // entries in {-1,0,1}, entry sum zero
    for (const auto& rel : rc4.relations) {
        long long sum = 0;
        for (long long x : rel) {
            CHECK(std::abs(x) <= 1);
            sum += x;
        }
        CHECK(sum == 0);
    }
    // the lattice has integer rank 2
    QuotientPresentation q = quotient(c4a.size(), rc4.relations);
    CHECK(q.free_rank() == c4a.size() - 2);
    CHECK(q.invariant_factors().empty());
}

TEST_CASE("d2 relations") {
    Graph k2 = gen_named(NamedGraph::complete, 2);
    ArcTable a(k2);
    RelationSet r = relations_from(builtin(BuiltinDigraph::d2), k2, a);
    REQUIRE(r.relations.size() == 1);
    CHECK(r.relations[0] == unit(a.size(), {{a.index(0, 1), 2}, {a.index(1, 0), 2}}));

    Graph k3 = gen_named(NamedGraph::complete, 3);
    ArcTable k3a(k3);
    RelationSet rk3 = relations_from(builtin(BuiltinDigraph::d2), k3, k3a);
    CHECK(contains(rk3, unit(k3a.size(), {{k3a.index(0, 1), 2}, {k3a.index(1, 0), 2}})));
}

TEST_CASE("d3 relations and the Z2xZ2 validation") {
    Graph k3 = gen_named(NamedGraph::complete, 3);
    ArcTable a(k3);
    RelationSet r3 = relations_from(builtin(BuiltinDigraph::d3), k3, a);
    CHECK(contains(r3, unit(a.size(), {{a.index(0, 1), 1}, {a.index(1, 2), 1}})));

    RelationSet all = theta({builtin(BuiltinDigraph::d2), builtin(BuiltinDigraph::d3)}, k3, a);
    QuotientPresentation q = quotient(a.size(), all.relations);
    CHECK(q.free_rank() == 0);
    REQUIRE(q.invariant_factors().size() == 2);
    CHECK(q.invariant_factors()[0] == 2);
    CHECK(q.invariant_factors()[1] == 2);
    // e_{(0,1)} + e_{(1,2)}: both clockwise arcs carry the same order-2 element
    std::vector<Int> x(a.size(), 0);
    x[a.index(0, 1)] = 1;
    x[a.index(1, 2)] = 1;
    CHECK(q.project(x).is_zero());
    // a single clockwise arc is nonzero
    std::vector<Int> y(a.size(), 0);
    y[a.index(0, 1)] = 1;
    CHECK_FALSE(q.project(y).is_zero());
}

TEST_CASE("theta") {
    Graph c7 = gen_named(NamedGraph::cycle, 7);
    ArcTable a(c7);
    CHECK(theta({builtin(BuiltinDigraph::d1)}, c7, a).relations.empty());
    CHECK(theta({}, c7, a).relations.empty());

    // determinism
    Graph u53 = gen_named(NamedGraph::u53);
    ArcTable ua(u53);
    RelationSet r1 = theta({builtin(BuiltinDigraph::d1)}, u53, ua);
    RelationSet r2 = theta({builtin(BuiltinDigraph::d1)}, u53, ua);
    CHECK(r1.relations == r2.relations);
    CHECK(std::is_sorted(r1.relations.begin(), r1.relations.end()));
}

TEST_CASE("relation support matches homomorphism images") {
    Graph c4 = gen_named(NamedGraph::cycle, 4);
    ArcTable a(c4);
    ValuedDigraph d1 = builtin(BuiltinDigraph::d1);
    for (const auto& rel : relations_from(d1, c4, a).relations)
        for (int i = 0; i < a.size(); ++i)
            if (rel[i] != 0) CHECK(c4.has_edge(a.arc(i).first, a.arc(i).second));
}

TEST_CASE("odd cycle digraph") {
    Graph c3 = gen_named(NamedGraph::cycle, 3);
    ValuedDigraph w = odd_cycle_digraph(c3);
    CHECK(w.n == 3);
    int plus = 0, minus = 0;
    for (long long v : w.values) {
        if (v == 1) ++plus;
        if (v == -1) ++minus;
    }
    CHECK(plus == 3);
    CHECK(minus == 3);

    ValuedDigraph w5 = odd_cycle_digraph(gen_named(NamedGraph::cycle, 5));
    CHECK(w5.arcs.size() == 10);
    for (long long v : w5.values) CHECK(std::abs(v) == 1);

    CHECK_THROWS_AS(odd_cycle_digraph(gen_named(NamedGraph::complete, 2)),
                    std::invalid_argument);
}

TEST_CASE("valued digraph io") {
    ValuedDigraph d = builtin(BuiltinDigraph::d1);
    std::stringstream ss;
    write_valued_digraph(ss, d);
    ValuedDigraph back = read_valued_digraph(ss);
    CHECK(back.n == d.n);
    CHECK(back.arcs == d.arcs);
    CHECK(back.values == d.values);
}
