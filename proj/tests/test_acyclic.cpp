#include <doctest.h>

#include <random>

#include "dgk/acyclic_kernels.hpp"
#include "dgk/enumerate.hpp"
#include "dgk/generate.hpp"
#include "dgk/oracle.hpp"
#include "dgk/structure.hpp"

using namespace dgk;

TEST_CASE("unique_one_kernel on the stated cases") {
    CHECK(unique_one_kernel(Digraph(1, {})) == VertexSet(1, {0}));
    CHECK(unique_one_kernel(Digraph(3, {{0, 1}, {1, 2}})) == VertexSet(3, {0, 2}));
    CHECK(unique_one_kernel(Digraph(4, {})) == VertexSet::full(4));
    CHECK_THROWS_AS(unique_one_kernel(Digraph(2, {{0, 1}, {1, 0}})), validation_error);
}

TEST_CASE("exactly one stable 1-cover exists in small acyclic digraphs") {
    for (int n = 1; n <= 6; ++n) {
        EnumerationSpec spec;
        spec.family = Family::acyclic;
        spec.n = n;
        spec.dedup = true;
        enumerate_instances(spec, 0, [&](const EnumInstance& inst) {
            VertexSet computed = unique_one_kernel(inst.g);
            auto cov1 = cover_masks(inst.g, 1);
            int found = 0;
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                VertexSet X(n);
                for (int v = 0; v < n; ++v)
                    if ((m >> v) & 1u) X.set(v);
                if (!is_stable(inst.g, X)) continue;
                VertexSet covered(n);
                for (int v : X) covered |= cov1[static_cast<std::size_t>(v)];
                if (covered != inst.g.vertices()) continue;
                ++found;
                CHECK(X == computed);
            }
            CHECK(found == 1);
            return true;
        });
    }
}

TEST_CASE("k_cover_set follows the stated recursion") {
    Digraph path4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(k_cover_set(path4, 1) == VertexSet(4, {0, 2}));

    Digraph small(3, {{0, 1}, {0, 2}});
    CHECK(k_cover_set(small, 3) == VertexSet(3, {0})); // |G| <= k takes the root

    CHECK(k_cover_set(Digraph(1, {}), 0) == VertexSet(1, {0}));

    CHECK_THROWS_AS(k_cover_set(Digraph(2, {}), 1), validation_error);        // two sources
    CHECK_THROWS_AS(k_cover_set(Digraph(2, {{0, 1}, {1, 0}}), 1), validation_error); // cyclic
}

TEST_CASE("k_cover_set respects both bounds on random single-source acyclic digraphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        GeneratorSpec spec;
        spec.kind = GenKind::single_source_acyclic;
        spec.n = 2 + static_cast<int>(rng() % 60);
        spec.extra = static_cast<int>(rng() % (2 * spec.n));
        spec.seed = rng();
        Digraph g = generate(spec).g;
        int k = static_cast<int>(rng() % 6);
        VertexSet X = k_cover_set(g, k);
        CHECK(k_covers(g, X, g.vertices(), k));
        // |X| <= 1 + (n-1)/(k+1)
        CHECK(static_cast<long long>(k + 1) * (X.count() - 1) <= g.order() - 1);
        bool tight_bound = static_cast<long long>(k + 1) * (X.count() - 1) <= g.order() - 2;
        CHECK((g.order() == 1 || tight_bound || !is_stable(g, X)));
    }
}

TEST_CASE("acyclic k-kernel construction matches the stated cases") {
    Digraph path4(4, {{0, 1}, {1, 2}, {2, 3}});
    auto cert = k_kernel_single_source_acyclic(path4, 2);
    CHECK(cert.kernel == VertexSet(4, {0, 2}));
    CHECK(cert.claimed_bound == Rational(2));
    auto best = min_k_kernel_bruteforce(path4, 2);
    REQUIRE(best.has_value());
    CHECK(best->first == 2);

    // star: the root 1-covers everything
    Digraph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(k_kernel_single_source_acyclic(star, 2).kernel == VertexSet(5, {0}));
}

TEST_CASE("tight family: size and exact minimum") {
    CHECK(tight_instance(3, 6).order() == 20);
    CHECK(tight_instance(2, 1).order() == 4);

    Digraph t32 = tight_instance(3, 2);
    auto best = min_k_kernel_bruteforce(t32, 3);
    REQUIRE(best.has_value());
    CHECK(best->first == 3); // 1 + (|G|-2)/3

    auto cert = k_kernel_single_source_acyclic(t32, 3);
    CHECK(cert.kernel.count() == 3); // construction meets the bound exactly here
}

TEST_CASE("edge bipartition invariants") {
    Digraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    auto arb = spanning_arborescence(g);
    REQUIRE(arb.has_value());
    auto bip = edge_bipartition(g, arb->order);
    CHECK(bip.forward.edge_count() + bip.backward.edge_count() == g.edge_count());
    CHECK(topological_order(bip.forward).has_value());
    CHECK(topological_order(bip.backward).has_value());
    CHECK(bip.forward.sources().count() == 1);
    for (auto [u, v] : bip.forward.edges())
        CHECK(bip.position[static_cast<std::size_t>(u)] < bip.position[static_cast<std::size_t>(v)]);
    for (auto [u, v] : bip.backward.edges())
        CHECK(bip.position[static_cast<std::size_t>(u)] > bip.position[static_cast<std::size_t>(v)]);
}

TEST_CASE("arborescence k-kernel on the stated cases") {
    Digraph cyc4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto cert = k_kernel_arborescence(cyc4, 2);
    CHECK(cert.kernel == VertexSet(4, {0, 2}));
    CHECK(cert.claimed_bound == Rational(3));

    Digraph trans3(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(k_kernel_arborescence(trans3, 2).kernel == VertexSet(3, {0}));

    Digraph two(2, {{0, 1}});
    CHECK(k_kernel_arborescence(two, 5).kernel == VertexSet(2, {0}));
}

TEST_CASE("constructions verify on random strongly connected digraphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 120; ++trial) {
        GeneratorSpec spec;
        spec.kind = GenKind::strongly_connected;
        spec.n = 2 + static_cast<int>(rng() % 40);
        spec.density = 0.15;
        spec.seed = rng();
        Digraph g = generate(spec).g;
        int k = 2 + static_cast<int>(rng() % 4);
        auto cert = k_kernel_arborescence(g, k);
        CHECK(static_cast<long long>(k - 1) * (cert.kernel.count() - 1) <= g.order() - 2);
    }
}

TEST_CASE("reachability table is transitive and reflexive") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        GeneratorSpec spec;
        spec.kind = GenKind::single_source_acyclic;
        spec.n = 2 + static_cast<int>(rng() % 20);
        spec.extra = static_cast<int>(rng() % spec.n);
        spec.seed = rng();
        Digraph g = generate(spec).g;
        auto table = reachability(g);
        for (int v = 0; v < g.order(); ++v) {
            CHECK(table.reach[static_cast<std::size_t>(v)].test(v));
            for (int u : table.reach[static_cast<std::size_t>(v)])
                CHECK(table.reach[static_cast<std::size_t>(u)].is_subset_of(
                    table.reach[static_cast<std::size_t>(v)]));
        }
    }
}
