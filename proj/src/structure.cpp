#include "dgk/structure.hpp"

#include <algorithm>

namespace dgk {

std::optional<std::vector<int>> topological_order(const Digraph& g, const VertexSet& within) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(within.count()));
    VertexSet remaining = within;
    while (remaining.any()) {
        int pick = -1;
        for (int v : remaining) {
            if (!g.in(v).intersects(remaining)) { pick = v; break; }
        }
        if (pick < 0) return std::nullopt; // every remaining vertex has an in-edge: cycle
        order.push_back(pick);
        remaining.reset(pick);
    }
    return order;
}

std::optional<std::vector<int>> topological_order(const Digraph& g) {
    return topological_order(g, g.vertices());
}

namespace {

// Iterative Tarjan SCC; returns component id per vertex, components
// numbered in reverse topological order of the condensation.
std::vector<int> scc_ids(const Digraph& g, int& count) {
    int n = g.order();
    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        comp(static_cast<std::size_t>(n), -1);
    std::vector<int> stack, frame_v, frame_it;
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.out(v).to_vector();
    int next_index = 0;
    count = 0;
    for (int start = 0; start < n; ++start) {
        if (index[static_cast<std::size_t>(start)] >= 0) continue;
        frame_v.push_back(start);
        frame_it.push_back(0);
        index[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = next_index++;
        stack.push_back(start);
        on_stack[static_cast<std::size_t>(start)] = 1;
        while (!frame_v.empty()) {
            int v = frame_v.back();
            int& it = frame_it.back();
            const auto& row = adj[static_cast<std::size_t>(v)];
            if (it < static_cast<int>(row.size())) {
                int w = row[static_cast<std::size_t>(it++)];
                if (index[static_cast<std::size_t>(w)] < 0) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = 1;
                    frame_v.push_back(w);
                    frame_it.push_back(0);
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    while (true) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = 0;
                        comp[static_cast<std::size_t>(w)] = count;
                        if (w == v) break;
                    }
                    ++count;
                }
                frame_v.pop_back();
                frame_it.pop_back();
                if (!frame_v.empty()) {
                    int parent = frame_v.back();
                    low[static_cast<std::size_t>(parent)] =
                        std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                }
            }
        }
    }
    return comp;
}

} // namespace

std::optional<Arborescence> spanning_arborescence(const Digraph& g) {
    int n = g.order();
    if (n == 0) return std::nullopt;
    int comp_count = 0;
    std::vector<int> comp = scc_ids(g, comp_count);
    // Source components of the condensation: only their members can reach
    // everything; a unique source component means they all do.
    std::vector<char> has_in(static_cast<std::size_t>(comp_count), 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.out(u))
            if (comp[static_cast<std::size_t>(u)] != comp[static_cast<std::size_t>(v)])
                has_in[static_cast<std::size_t>(comp[static_cast<std::size_t>(v)])] = 1;
    int source_comp = -1;
    for (int c = 0; c < comp_count; ++c)
        if (!has_in[static_cast<std::size_t>(c)]) {
            if (source_comp >= 0) return std::nullopt;
            source_comp = c;
        }
    int root = -1;
    for (int v = 0; v < n; ++v)
        if (comp[static_cast<std::size_t>(v)] == source_comp) { root = v; break; }

    Arborescence arb;
    arb.root = root;
    arb.parent.assign(static_cast<std::size_t>(n), -1);
    arb.order.clear();
    VertexSet level = VertexSet::single(n, root);
    VertexSet seen = level;
    while (level.any()) {
        for (int v : level) arb.order.push_back(v);
        VertexSet next(n);
        for (int v : level) next |= g.out(v);
        next -= seen;
        for (int v : next) {
            VertexSet from = g.in(v) & level;
            arb.parent[static_cast<std::size_t>(v)] = from.first();
        }
        seen |= next;
        level = std::move(next);
    }
    if (static_cast<int>(arb.order.size()) != n) return std::nullopt;
    return arb;
}

Digraph induced_subgraph(const Digraph& g, const VertexSet& keep, std::vector<int>* old_ids) {
    std::vector<int> ids = keep.to_vector();
    int k = static_cast<int>(ids.size());
    std::vector<int> newid(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < k; ++i) newid[static_cast<std::size_t>(ids[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> rows(static_cast<std::size_t>(k), VertexSet(k));
    for (int i = 0; i < k; ++i) {
        VertexSet row = g.out(ids[static_cast<std::size_t>(i)]) & keep;
        for (int v : row) rows[static_cast<std::size_t>(i)].set(newid[static_cast<std::size_t>(v)]);
    }
    if (old_ids) *old_ids = std::move(ids);
    return Digraph::from_out_rows(std::move(rows));
}

Digraph add_edges(const Digraph& g, std::span<const Edge> extra) {
    std::vector<Edge> es = g.edges();
    es.insert(es.end(), extra.begin(), extra.end());
    return Digraph(g.order(), es);
}

namespace {

struct MutableGraph {
    std::vector<VertexSet> out, in;
    VertexSet alive;

    explicit MutableGraph(const Digraph& g) : alive(g.vertices()) {
        out.reserve(static_cast<std::size_t>(g.order()));
        in.reserve(static_cast<std::size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) {
            out.push_back(g.out(v));
            in.push_back(g.in(v));
        }
    }

    void remove_edge(int u, int v) {
        out[static_cast<std::size_t>(u)].reset(v);
        in[static_cast<std::size_t>(v)].reset(u);
    }
    void remove_vertex(int v) {
        for (int w : out[static_cast<std::size_t>(v)]) in[static_cast<std::size_t>(w)].reset(v);
        for (int w : in[static_cast<std::size_t>(v)]) out[static_cast<std::size_t>(w)].reset(v);
        out[static_cast<std::size_t>(v)].clear();
        in[static_cast<std::size_t>(v)].clear();
        alive.reset(v);
    }
    bool is_source(int v) const { return alive.test(v) && in[static_cast<std::size_t>(v)].empty(); }
    std::optional<Edge> first_digon() const {
        for (int u : alive) {
            VertexSet both = out[static_cast<std::size_t>(u)] & in[static_cast<std::size_t>(u)];
            int v = both.next(u); // smallest partner above u
            if (v >= 0) return Edge{u, v};
        }
        return std::nullopt;
    }
};

} // namespace

DigonReduction reduce_digons(const Digraph& g) {
    if (g.sources().any())
        throw validation_error(validation_error::kind::has_source,
                               "digon reduction requires a source-free digraph");
    MutableGraph mg(g);
    DigonReduction red;

    auto delete_with_out_neighbours = [&](int anchor, VertexSet victims) {
        DigonReduction::VertexDeletion del;
        del.anchor = anchor;
        VertexSet grow = victims;
        for (int v : victims) grow |= mg.out[static_cast<std::size_t>(v)];
        grow &= mg.alive;
        del.removed = grow.to_vector();
        for (int v : grow) mg.remove_vertex(v);
        red.deletions.push_back(std::move(del));
        // A deletion can expose new sources; purge them the same way.
        while (true) {
            int src = -1;
            for (int v : mg.alive)
                if (mg.is_source(v)) { src = v; break; }
            if (src < 0) break;
            DigonReduction::VertexDeletion purge;
            purge.anchor = src;
            VertexSet gone = VertexSet::single(mg.alive.universe(), src) | mg.out[static_cast<std::size_t>(src)];
            gone &= mg.alive;
            purge.removed = gone.to_vector();
            for (int v : gone) mg.remove_vertex(v);
            red.deletions.push_back(std::move(purge));
        }
    };

    while (auto dig = mg.first_digon()) {
        auto [u, v] = *dig; // u < v, both edges present
        if (mg.in[static_cast<std::size_t>(v)].count() >= 2) {
            mg.remove_edge(u, v);
            red.removed_edges.push_back({u, v});
        } else if (mg.in[static_cast<std::size_t>(u)].count() >= 2) {
            mg.remove_edge(v, u);
            red.removed_edges.push_back({v, u});
        } else {
            VertexSet pair(mg.alive.universe());
            pair.set(u);
            pair.set(v);
            delete_with_out_neighbours(u, pair);
        }
    }

    red.survivor_ids = mg.alive.to_vector();
    int k = static_cast<int>(red.survivor_ids.size());
    std::vector<int> newid(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < k; ++i) newid[static_cast<std::size_t>(red.survivor_ids[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> rows(static_cast<std::size_t>(k), VertexSet(k));
    for (int i = 0; i < k; ++i)
        for (int w : mg.out[static_cast<std::size_t>(red.survivor_ids[static_cast<std::size_t>(i)])])
            rows[static_cast<std::size_t>(i)].set(newid[static_cast<std::size_t>(w)]);
    red.reduced = Digraph::from_out_rows(std::move(rows));
    return red;
}

VertexSet extend_kernel(const DigonReduction& red, const VertexSet& reduced_kernel, int original_n) {
    VertexSet k(original_n);
    for (int v : reduced_kernel) k.set(red.survivor_ids[static_cast<std::size_t>(v)]);
    for (const auto& del : red.deletions) k.set(del.anchor);
    return k;
}

} // namespace dgk
