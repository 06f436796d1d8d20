#include <doctest.h>

#include "dgk/cover.hpp"
#include "dgk/enumerate.hpp"
#include "dgk/oracle.hpp"
#include "dgk/partition.hpp"
#include "dgk/structure.hpp"

using namespace dgk;

TEST_CASE("topological order") {
    auto t = topological_order(Digraph(3, {{0, 1}, {1, 2}}));
    REQUIRE(t.has_value());
    CHECK(*t == std::vector<int>{0, 1, 2});

    CHECK(!topological_order(Digraph(2, {{0, 1}, {1, 0}})).has_value());

    auto edgeless = topological_order(Digraph(2, {}));
    REQUIRE(edgeless.has_value());
    CHECK(*edgeless == std::vector<int>{0, 1}); // id tie-break
}

TEST_CASE("spanning arborescence") {
    auto cyc = spanning_arborescence(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}));
    REQUIRE(cyc.has_value());
    CHECK(cyc->root == 0);
    CHECK(cyc->parent[0] == -1);
    CHECK(cyc->parent[1] == 0);
    CHECK(cyc->parent[2] == 1);

    CHECK(!spanning_arborescence(Digraph(2, {})).has_value());

    auto path = spanning_arborescence(Digraph(3, {{0, 1}, {1, 2}}));
    REQUIRE(path.has_value());
    CHECK(path->root == 0);
    CHECK(path->order == std::vector<int>{0, 1, 2});
}

TEST_CASE("classify_partition on the stated cases") {
    Digraph g1(2, {{0, 1}});
    CHECK(classify_partition(g1, VertexSet(2, {1}), VertexSet(2, {0})).is_split());

    Digraph g2(3, {{0, 1}});
    auto c2 = classify_partition(g2, VertexSet(3, {0, 1}), VertexSet(3, {2}));
    CHECK(c2.which == PartitionClass::kind::valid_break);
    CHECK(!c2.is_split());

    Digraph g3(2, {});
    auto c3 = classify_partition(g3, VertexSet(2), VertexSet(2, {0, 1}));
    CHECK(c3.which == PartitionClass::kind::invalid); // not a tournament

    // Every valid split is also a valid break.
    CHECK(classify_partition(g1, VertexSet(2, {1}), VertexSet(2, {0})).is_break());
}

TEST_CASE("reduce_digons handles the stated cases") {
    SUBCASE("digon edges removed, no vertex deleted") {
        // Two digons here: 0<->1 and 0<->2 (via 0->2 and 2->0). Each is
        // resolved by a single edge deletion that leaves no source.
        Digraph g(3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}, {0, 2}});
        auto red = reduce_digons(g);
        CHECK(red.reduced.order() == 3);
        CHECK(red.deletions.empty());
        REQUIRE(red.removed_edges.size() == 2);
        CHECK(red.removed_edges[0] == Edge{0, 1}); // prefer u->v with u<v
        CHECK(red.removed_edges[1] == Edge{2, 0}); // deleting 0->2 would expose a source
        CHECK(red.reduced.is_oriented());
        CHECK(red.reduced.sources().empty());
    }
    SUBCASE("digon-free input is unchanged") {
        Digraph g(3, {{0, 1}, {1, 2}, {2, 0}});
        auto red = reduce_digons(g);
        CHECK(red.reduced == g);
        CHECK(red.removed_edges.empty());
        CHECK(red.deletions.empty());
    }
    SUBCASE("pure 2-cycle deletes both vertices") {
        Digraph g(2, {{0, 1}, {1, 0}});
        auto red = reduce_digons(g);
        CHECK(red.reduced.order() == 0);
        REQUIRE(red.deletions.size() == 1);
        CHECK(red.deletions[0].anchor == 0);
        CHECK(red.deletions[0].removed == std::vector<int>{0, 1});
        CHECK(red.removed_edges.empty());
    }
    SUBCASE("source input rejected") {
        CHECK_THROWS_AS(reduce_digons(Digraph(2, {{0, 1}})), validation_error);
    }
}

TEST_CASE("digon reduction preserves 2-kernels after re-adding anchors") {
    // Exhaustive over all source-free digraphs on up to 5 vertices.
    for (int n = 2; n <= 5; ++n) {
        EnumerationSpec spec;
        spec.family = Family::all_digraphs;
        spec.n = n;
        enumerate_instances(spec, 0, [&](const EnumInstance& inst) {
            if (inst.g.sources().any()) return true;
            auto red = reduce_digons(inst.g);
            CHECK(red.reduced.is_oriented());
            if (red.reduced.order() > 0) CHECK(red.reduced.sources().empty());
            for_each_k_kernel(red.reduced, 2, [&](const VertexSet& K) {
                VertexSet big = extend_kernel(red, K, n);
                CHECK(verify_kernel(inst.g, big, 2).ok());
                return true;
            });
            if (red.reduced.order() == 0) {
                VertexSet big = extend_kernel(red, VertexSet(0), n);
                CHECK(verify_kernel(inst.g, big, 2).ok());
            }
            return true;
        });
    }
}

TEST_CASE("induced subgraph keeps ids in order") {
    Digraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::vector<int> ids;
    Digraph h = induced_subgraph(g, VertexSet(4, {1, 3}), &ids);
    CHECK(ids == std::vector<int>{1, 3});
    CHECK(h.order() == 2);
    CHECK(h.edge_count() == 0);
}
