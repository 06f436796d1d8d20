#include "dgk/cover.hpp"

#include <algorithm>

namespace dgk {

VertexSet out_neighbours(const Digraph& g, const VertexSet& of) {
    VertexSet r(g.order());
    for (int v : of) r |= g.out(v);
    return r;
}

VertexSet closed_out_neighbours(const Digraph& g, const VertexSet& of) {
    VertexSet r = of;
    for (int v : of) r |= g.out(v);
    return r;
}

VertexSet reach_within(const Digraph& g, const VertexSet& from, int k) {
    VertexSet seen = from;
    VertexSet frontier = from;
    for (int d = 0; d < k && frontier.any(); ++d) {
        VertexSet next(g.order());
        for (int v : frontier) next |= g.out(v);
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

bool k_covers(const Digraph& g, const VertexSet& X, const VertexSet& Y, int k) {
    return reach_within(g, X, k).contains_all(Y);
}

bool k_covers(const Digraph& g, int x, int y, int k) {
    return k_covers(g, VertexSet::single(g.order(), x), VertexSet::single(g.order(), y), k);
}

std::vector<VertexSet> cover_masks(const Digraph& g, int k) {
    int n = g.order();
    std::vector<VertexSet> cov(static_cast<std::size_t>(n), VertexSet(n));
    for (int v = 0; v < n; ++v) cov[v].set(v);
    for (int step = 0; step < k; ++step) {
        std::vector<VertexSet> next = cov;
        for (int v = 0; v < n; ++v)
            for (int w : g.out(v)) next[v] |= cov[w];
        cov = std::move(next);
    }
    return cov;
}

bool is_stable(const Digraph& g, const VertexSet& X) {
    for (int v : X)
        if (g.out(v).intersects(X)) return false;
    return true;
}

std::optional<Edge> stability_violation(const Digraph& g, const VertexSet& X) {
    for (int v : X) {
        VertexSet hit = g.out(v) & X;
        if (hit.any()) return Edge{v, hit.first()};
    }
    return std::nullopt;
}

std::string KernelFailure::message() const {
    switch (which) {
        case kind::not_stable:
            return "kernel not stable: edge (" + std::to_string(violating_edge.first) + "," +
                   std::to_string(violating_edge.second) + ") inside the set";
        case kind::uncovered:
            return "vertex " + std::to_string(uncovered_vertex) + " not covered";
        case kind::bound_exceeded:
            return "kernel larger than its claimed bound";
    }
    return "unknown failure";
}

KernelCheck verify_kernel(const Digraph& g, const VertexSet& X, int k,
                          std::optional<Rational> claimed_bound) {
    KernelCheck res;
    if (auto bad = stability_violation(g, X)) {
        res.failure = KernelFailure{KernelFailure::kind::not_stable, *bad, -1};
        return res;
    }
    VertexSet covered = reach_within(g, X, k);
    VertexSet missing = g.vertices() - covered;
    if (missing.any()) {
        res.failure = KernelFailure{KernelFailure::kind::uncovered, {-1, -1}, missing.first()};
        return res;
    }
    Rational bound = claimed_bound.value_or(Rational(X.count()));
    if (Rational(X.count()) > bound) {
        res.failure = KernelFailure{KernelFailure::kind::bound_exceeded, {-1, -1}, -1};
        return res;
    }
    res.cert = KernelCertificate{X, k, bound};
    return res;
}

std::optional<std::vector<int>> witness_path(const Digraph& g, const VertexSet& X, int y, int k) {
    int n = g.order();
    // Multi-source BFS recording distance from X.
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    for (int x : X) dist[static_cast<std::size_t>(x)] = 0;
    VertexSet frontier = X;
    int d = 0;
    while (dist[static_cast<std::size_t>(y)] < 0 && d < k && frontier.any()) {
        VertexSet next(n);
        for (int v : frontier) next |= g.out(v);
        ++d;
        VertexSet fresh(n);
        for (int v : next)
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = d;
                fresh.set(v);
            }
        frontier = std::move(fresh);
    }
    if (dist[static_cast<std::size_t>(y)] < 0) return std::nullopt;
    std::vector<int> path;
    int cur = y;
    path.push_back(cur);
    while (dist[static_cast<std::size_t>(cur)] > 0) {
        int want = dist[static_cast<std::size_t>(cur)] - 1;
        int best = -1;
        for (int u : g.in(cur))
            if (dist[static_cast<std::size_t>(u)] == want) { best = u; break; }
        cur = best;
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::vector<int>> certificate_witnesses(const Digraph& g, const KernelCertificate& cert) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
        auto p = witness_path(g, cert.kernel, v, cert.k);
        if (!p) throw invariant_violation("certificate has no witness for vertex " + std::to_string(v));
        out.push_back(std::move(*p));
    }
    return out;
}

} // namespace dgk
