#include <doctest.h>

#include <random>

#include "dgk/acyclic_kernels.hpp"
#include "dgk/generate.hpp"
#include "dgk/io.hpp"
#include "dgk/split_qk.hpp"

using namespace dgk;

TEST_CASE("parse_instance on the stated cases") {
    auto inst = parse_instance("digraph 2 1\ne 0 1\n");
    CHECK(inst.g.order() == 2);
    CHECK(inst.g.has_edge(0, 1));
    CHECK(!inst.S);
    CHECK(!inst.weights);

    auto split = parse_instance("digraph 2 1\ne 0 1\nS 1\n");
    REQUIRE(split.S.has_value());
    CHECK(*split.S == VertexSet(2, {1}));

    try {
        parse_instance("digraph 2 1\ne 0 0\n");
        FAIL("loop accepted");
    } catch (const validation_error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("parser diagnostics carry positions") {
    auto expect_fail = [](const std::string& text, const std::string& needle) {
        try {
            parse_instance(text);
            FAIL_CHECK("accepted: " << text);
        } catch (const validation_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_fail("", "header");
    expect_fail("digraph 2\n", "header");
    expect_fail("digraph 2 1\ne 0 5\n", "out of range");
    expect_fail("digraph 2 2\ne 0 1\n", "announces");
    expect_fail("digraph 2 1\ne 0 1\nq 1\n", "unknown directive");
    expect_fail("digraph 2 1\ne 0 1\nw 0 -3\n", "nonnegative");
    expect_fail("digraph 2 1\ne 0 1\nw 0 1\nw 0 2\n", "duplicate weight");
    expect_fail("digraph 2 1\ne 0 1\nS 0\nS 1\n", "duplicate S");
}

TEST_CASE("weights and comments parse") {
    auto inst = parse_instance("# weighted\ndigraph 3 1 # trailing\ne 0 1\nw 0 5\nw 2 1\n");
    REQUIRE(inst.weights.has_value());
    CHECK(inst.weights->w == std::vector<long long>{5, 0, 1});
}

TEST_CASE("emit/parse round trip") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        GeneratorSpec spec;
        spec.kind = GenKind::split;
        spec.n_s = 1 + static_cast<int>(rng() % 4);
        spec.n_t = 1 + static_cast<int>(rng() % 5);
        spec.seed = rng();
        auto inst = generate(spec);
        WeightMap f = WeightMap::uniform(inst.g.order(), 0);
        for (auto& x : f.w) x = static_cast<long long>(rng() % 4);
        std::string text = emit_instance(inst.g, &*inst.S, &f);
        auto back = parse_instance(text);
        CHECK(back.g == inst.g);
        CHECK(*back.S == *inst.S);
        // Canonical: re-emission is byte-identical.
        CHECK(emit_instance(back.g, &*back.S, back.weights ? &*back.weights : nullptr) == text);
    }
}

TEST_CASE("dot export is deterministic and marks the kernel") {
    Digraph g(3, {{0, 1}, {1, 2}});
    VertexSet k(3, {0, 2});
    std::string dot = emit_dot(g, k);
    CHECK(dot == emit_dot(g, k));
    CHECK(dot.find("0 [class=\"kernel\"]") != std::string::npos);
    CHECK(dot.find("1;") != std::string::npos);
    CHECK(dot.find("0 -> 1;") != std::string::npos);
}

TEST_CASE("certificates serialize canonically and re-verify") {
    ParsedInstance inst = parse_instance("digraph 3 3\ne 2 1\ne 0 1\ne 2 0\nS 0\n");
    SplitPartition split{*inst.S, inst.g.vertices() - *inst.S};
    KernelCertificate cert = small_quasi_kernel(inst.g, split);
    nlohmann::json doc = certificate_json("split-quasi-kernel", inst, cert);
    CHECK(doc["kernel"] == nlohmann::json::array({2}));
    CHECK(doc["bound"] == "3/2");
    CHECK(dump_json(doc) == dump_json(certificate_json("split-quasi-kernel", inst, cert)));

    auto v = verify_certificate_json(doc, inst);
    CHECK(v.ok);

    SUBCASE("tampering is caught") {
        nlohmann::json bad = doc;
        bad["kernel"] = nlohmann::json::array({1, 2});
        bad.erase("witness");
        auto r = verify_certificate_json(bad, inst);
        CHECK(!r.ok);
    }
    SUBCASE("wrong instance is caught by the hash") {
        ParsedInstance other = parse_instance("digraph 3 2\ne 2 1\ne 0 1\nS 0\n");
        auto r = verify_certificate_json(doc, other);
        CHECK(!r.ok);
        CHECK(r.reason.find("hash") != std::string::npos);
    }
    SUBCASE("broken witness path is caught") {
        nlohmann::json bad = doc;
        bad["witness"][1] = nlohmann::json::array({2, 2, 1});
        auto r = verify_certificate_json(bad, inst);
        CHECK(!r.ok);
    }
}

TEST_CASE("weighted certificates check their coverage") {
    ParsedInstance inst = parse_instance("digraph 3 3\ne 0 1\ne 1 2\ne 2 0\nS 1 2\nw 0 1\nw 1 1\nw 2 1\n");
    KernelCertificate cert{VertexSet(3, {0}), 2, Rational(3)};
    nlohmann::json doc = certificate_json("break-large-two-kernel", inst, cert, 2);
    CHECK(verify_certificate_json(doc, inst).ok);
    doc["coverage"] = 3;
    CHECK(!verify_certificate_json(doc, inst).ok);
}

TEST_CASE("fnv1a64 matches the reference vector") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}
