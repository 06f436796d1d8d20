#include <doctest.h>

#include "dgk/generate.hpp"
#include "dgk/partition.hpp"
#include "dgk/structure.hpp"

using namespace dgk;

TEST_CASE("generators are deterministic per seed") {
    GeneratorSpec spec;
    spec.kind = GenKind::tournament;
    spec.n = 5;
    spec.seed = 1;
    CHECK(generate(spec).g == generate(spec).g);

    spec.kind = GenKind::split;
    spec.n_s = 3;
    spec.n_t = 4;
    spec.density = 0.5;
    spec.seed = 99;
    auto a = generate(spec);
    auto b = generate(spec);
    CHECK(a.g == b.g);
    CHECK(*a.S == *b.S);

    spec.seed = 100;
    CHECK(!(generate(spec).g == a.g)); // different seed, different graph (overwhelmingly)
}

TEST_CASE("split generator postconditions") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorSpec spec;
        spec.kind = GenKind::split;
        spec.n_s = 1 + static_cast<int>(seed % 5);
        spec.n_t = 1 + static_cast<int>((seed * 7) % 6);
        spec.density = (seed % 2) ? 0.3 : 0.9;
        spec.seed = seed;
        auto inst = generate(spec);
        REQUIRE(inst.S.has_value());
        auto cls = classify_partition(inst.g, *inst.S, inst.g.vertices() - *inst.S);
        CHECK(cls.is_split());
        for (int s : *inst.S) CHECK(inst.g.in(s).any()); // no S-source
    }
    GeneratorSpec bad;
    bad.kind = GenKind::split;
    bad.n_s = 2;
    bad.n_t = 0;
    CHECK_THROWS_AS(generate(bad), validation_error);
}

TEST_CASE("break generator postconditions") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        GeneratorSpec spec;
        spec.kind = GenKind::brk;
        spec.n_s = static_cast<int>(seed % 5);
        spec.n_t = 1 + static_cast<int>((seed * 3) % 5);
        spec.density = 0.6;
        spec.seed = seed;
        auto inst = generate(spec);
        auto cls = classify_partition(inst.g, *inst.S, inst.g.vertices() - *inst.S);
        CHECK(cls.is_break());
    }
}

TEST_CASE("arborescence-plus-edges admits a spanning arborescence") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GeneratorSpec spec;
        spec.kind = GenKind::arborescence_plus_edges;
        spec.n = 2 + static_cast<int>(seed % 12);
        spec.extra = static_cast<int>(seed % 9);
        spec.seed = seed;
        CHECK(spanning_arborescence(generate(spec).g).has_value());
    }
}

TEST_CASE("strongly-connected generator output is strongly connected") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GeneratorSpec spec;
        spec.kind = GenKind::strongly_connected;
        spec.n = 1 + static_cast<int>(seed % 14);
        spec.density = 0.2;
        spec.seed = seed;
        Digraph g = generate(spec).g;
        auto arb = spanning_arborescence(g);
        REQUIRE(arb.has_value());
        // Strong connectivity: the transpose has one too.
        std::vector<Edge> rev;
        for (auto [u, v] : g.edges()) rev.push_back({v, u});
        CHECK(spanning_arborescence(Digraph(g.order(), rev)).has_value());
    }
}

TEST_CASE("single-source acyclic generator postconditions") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GeneratorSpec spec;
        spec.kind = GenKind::single_source_acyclic;
        spec.n = 1 + static_cast<int>(seed % 20);
        spec.extra = static_cast<int>(seed % 15);
        spec.seed = seed;
        Digraph g = generate(spec).g;
        CHECK(topological_order(g).has_value());
        CHECK(g.sources().count() == 1);
    }
}
