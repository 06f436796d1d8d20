#include <doctest.h>

#include <random>
#include <set>

#include "dgk/digraph.hpp"
#include "dgk/vertex_set.hpp"

using namespace dgk;

TEST_CASE("vertex set behaves like a reference set") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 130);
        VertexSet vs(n);
        std::set<int> ref;
        for (int op = 0; op < 80; ++op) {
            int v = static_cast<int>(rng() % n);
            if (rng() & 1) {
                vs.set(v);
                ref.insert(v);
            } else {
                vs.reset(v);
                ref.erase(v);
            }
        }
        CHECK(vs.count() == static_cast<int>(ref.size()));
        CHECK(vs.to_vector() == std::vector<int>(ref.begin(), ref.end()));
        CHECK(vs.empty() == ref.empty());
        if (!ref.empty()) CHECK(vs.first() == *ref.begin());
        // Complement round trip
        CHECK(vs.complement().complement() == vs);
        CHECK(vs.complement().count() == n - vs.count());
    }
}

TEST_CASE("vertex set operations") {
    VertexSet a(100, {1, 50, 64, 65, 99});
    VertexSet b(100, {50, 65});
    CHECK(b.is_subset_of(a));
    CHECK(!a.is_subset_of(b));
    CHECK((a & b) == b);
    CHECK((a - b) == VertexSet(100, {1, 64, 99}));
    CHECK((a | b) == a);
    CHECK(a.intersects(b));
    CHECK(!b.intersects(VertexSet(100, {0, 2})));
    CHECK(a.next(50) == 64);
    CHECK(a.next(99) == -1);
    CHECK(VertexSet::full(100).count() == 100);
}

TEST_CASE("build_digraph accepts simple graphs") {
    Digraph g = build_digraph(1, {});
    CHECK(g.order() == 1);
    CHECK(g.edge_count() == 0);

    Digraph path = build_digraph(3, {{0, 1}, {1, 2}});
    CHECK(path.edge_count() == 2);
    CHECK(path.has_edge(0, 1));
    CHECK(!path.has_edge(1, 0));
    CHECK(path.in(2).test(1));
}

TEST_CASE("build_digraph rejects bad edges with distinct errors") {
    auto kind_of = [](auto fn) {
        try {
            fn();
        } catch (const validation_error& e) {
            return e.which;
        }
        return validation_error::kind::syntax;
    };
    CHECK(kind_of([] { build_digraph(2, {{0, 1}, {0, 1}}); }) == validation_error::kind::duplicate_edge);
    CHECK(kind_of([] { build_digraph(2, {{0, 0}}); }) == validation_error::kind::loop_edge);
    CHECK(kind_of([] { build_digraph(2, {{0, 2}}); }) == validation_error::kind::id_out_of_range);
}

TEST_CASE("in-adjacency is the exact transpose") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 40);
        std::vector<Edge> es;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && (rng() % 4) == 0) es.push_back({u, v});
        Digraph g(n, es);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                CHECK(g.out(u).test(v) == g.in(v).test(u));
    }
}

TEST_CASE("digons and orientation") {
    Digraph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(!g.is_oriented());
    auto d = g.digons();
    REQUIRE(d.size() == 1);
    CHECK(d[0] == Edge{0, 1});
    CHECK(Digraph(3, {{0, 1}, {1, 2}}).is_oriented());
}
