#include "dgk/generate.hpp"

#include <random>
#include <vector>

#include "dgk/errors.hpp"

namespace dgk {

std::optional<GenKind> gen_kind_from_name(const std::string& name) {
    if (name == "tournament") return GenKind::tournament;
    if (name == "split") return GenKind::split;
    if (name == "break") return GenKind::brk;
    if (name == "arborescence-plus-edges") return GenKind::arborescence_plus_edges;
    if (name == "strongly-connected") return GenKind::strongly_connected;
    if (name == "single-source-acyclic") return GenKind::single_source_acyclic;
    return std::nullopt;
}

std::string gen_kind_name(GenKind k) {
    switch (k) {
        case GenKind::tournament: return "tournament";
        case GenKind::split: return "split";
        case GenKind::brk: return "break";
        case GenKind::arborescence_plus_edges: return "arborescence-plus-edges";
        case GenKind::strongly_connected: return "strongly-connected";
        case GenKind::single_source_acyclic: return "single-source-acyclic";
    }
    return "?";
}

namespace {

using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t m) { return rng() % m; }
bool coin(Rng& rng) { return rng() & 1u; }
bool chance(Rng& rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

void require(bool ok, const char* msg) {
    if (!ok) throw validation_error(validation_error::kind::bad_precondition, msg);
}

// Edge accumulator with O(1) duplicate checks.
struct EdgeBag {
    int n;
    std::vector<char> present;
    std::vector<Edge> list;

    explicit EdgeBag(int nn) : n(nn), present(static_cast<std::size_t>(nn) * nn, 0) {}
    bool has(int u, int v) const { return present[static_cast<std::size_t>(u) * n + v]; }
    void add(int u, int v) {
        present[static_cast<std::size_t>(u) * n + v] = 1;
        list.push_back({u, v});
    }
    void remove(int u, int v) {
        present[static_cast<std::size_t>(u) * n + v] = 0;
        std::erase(list, Edge{u, v});
    }
    Digraph build() const { return Digraph(n, list); }
};

void add_tournament(Rng& rng, EdgeBag& bag, int n, int offset) {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng))
                bag.add(offset + i, offset + j);
            else
                bag.add(offset + j, offset + i);
        }
}

GeneratedInstance gen_split_or_break(const GeneratorSpec& spec, bool stable_side) {
    require(spec.n_s >= 0 && spec.n_t >= 0 && spec.n_s + spec.n_t >= 1, "need at least one vertex");
    if (stable_side)
        require(spec.n_s == 0 || spec.n_t >= 1,
                "split with a nonempty S needs tournament vertices to feed it");
    Rng rng(spec.seed);
    int b = spec.n_t, a = spec.n_s, n = a + b;
    EdgeBag bag(n);
    add_tournament(rng, bag, b, 0);
    if (!stable_side && a > 1) {
        // Random acyclic orientation: edges follow a random linear order.
        std::vector<int> order(static_cast<std::size_t>(a));
        for (int i = 0; i < a; ++i) order[static_cast<std::size_t>(i)] = b + i;
        for (int i = a - 1; i > 0; --i)
            std::swap(order[static_cast<std::size_t>(i)],
                      order[static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(i + 1)))]);
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j)
                if (chance(rng, spec.density))
                    bag.add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (chance(rng, spec.density)) {
                if (coin(rng))
                    bag.add(b + i, j);
                else
                    bag.add(j, b + i);
            }
    if (stable_side && a > 0) {
        // Feed every S-source from a random tournament vertex.
        for (int i = 0; i < a; ++i) {
            int s = b + i;
            bool fed = false;
            for (int j = 0; j < n && !fed; ++j) fed = bag.has(j, s);
            if (fed) continue;
            std::vector<int> candidates;
            for (int j = 0; j < b; ++j)
                if (!bag.has(s, j)) candidates.push_back(j);
            if (!candidates.empty()) {
                bag.add(candidates[below(rng, candidates.size())], s);
            } else {
                // s points at every tournament vertex: flip one edge.
                int t = static_cast<int>(below(rng, static_cast<std::uint64_t>(b)));
                bag.remove(s, t);
                bag.add(t, s);
            }
        }
    }
    VertexSet S(n);
    for (int i = 0; i < a; ++i) S.set(b + i);
    return {bag.build(), S};
}

} // namespace

GeneratedInstance generate(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    switch (spec.kind) {
        case GenKind::tournament: {
            require(spec.n >= 1, "need n >= 1");
            EdgeBag bag(spec.n);
            add_tournament(rng, bag, spec.n, 0);
            return {bag.build(), std::nullopt};
        }
        case GenKind::split:
            return gen_split_or_break(spec, true);
        case GenKind::brk:
            return gen_split_or_break(spec, false);
        case GenKind::arborescence_plus_edges: {
            require(spec.n >= 1, "need n >= 1");
            EdgeBag bag(spec.n);
            for (int v = 1; v < spec.n; ++v)
                bag.add(static_cast<int>(below(rng, static_cast<std::uint64_t>(v))), v);
            int added = 0;
            for (int tries = 0; tries < 10 * spec.extra && added < spec.extra; ++tries) {
                int u = static_cast<int>(below(rng, static_cast<std::uint64_t>(spec.n)));
                int v = static_cast<int>(below(rng, static_cast<std::uint64_t>(spec.n)));
                if (u == v || bag.has(u, v)) continue;
                bag.add(u, v);
                ++added;
            }
            return {bag.build(), std::nullopt};
        }
        case GenKind::strongly_connected: {
            require(spec.n >= 1, "need n >= 1");
            std::vector<int> order(static_cast<std::size_t>(spec.n));
            for (int i = 0; i < spec.n; ++i) order[static_cast<std::size_t>(i)] = i;
            for (int i = spec.n - 1; i > 0; --i)
                std::swap(order[static_cast<std::size_t>(i)],
                          order[static_cast<std::size_t>(below(rng, static_cast<std::uint64_t>(i + 1)))]);
            EdgeBag bag(spec.n);
            if (spec.n > 1)
                for (int i = 0; i < spec.n; ++i)
                    bag.add(order[static_cast<std::size_t>(i)],
                            order[static_cast<std::size_t>((i + 1) % spec.n)]);
            for (int u = 0; u < spec.n; ++u)
                for (int v = 0; v < spec.n; ++v)
                    if (u != v && !bag.has(u, v) && chance(rng, spec.density)) bag.add(u, v);
            return {bag.build(), std::nullopt};
        }
        case GenKind::single_source_acyclic: {
            require(spec.n >= 1, "need n >= 1");
            EdgeBag bag(spec.n);
            for (int v = 1; v < spec.n; ++v)
                bag.add(static_cast<int>(below(rng, static_cast<std::uint64_t>(v))), v);
            int added = 0;
            for (int tries = 0; tries < 10 * spec.extra && added < spec.extra; ++tries) {
                int u = static_cast<int>(below(rng, static_cast<std::uint64_t>(spec.n)));
                int v = static_cast<int>(below(rng, static_cast<std::uint64_t>(spec.n)));
                if (u >= v || bag.has(u, v)) continue; // forward edges keep it acyclic
                bag.add(u, v);
                ++added;
            }
            return {bag.build(), std::nullopt};
        }
    }
    throw validation_error(validation_error::kind::bad_precondition, "unknown generator kind");
}

} // namespace dgk
