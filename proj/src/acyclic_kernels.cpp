#include "dgk/acyclic_kernels.hpp"

#include <string>

#include "dgk/structure.hpp"

namespace dgk {

ReachabilityTable reachability(const Digraph& g, const VertexSet& within) {
    auto topo = topological_order(g, within);
    if (!topo)
        throw validation_error(validation_error::kind::not_acyclic,
                               "reachability table requires an acyclic digraph");
    ReachabilityTable t;
    t.reach.assign(static_cast<std::size_t>(g.order()), VertexSet(g.order()));
    for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
        int v = *it;
        VertexSet r(g.order());
        r.set(v);
        VertexSet succ = g.out(v) & within;
        for (int w : succ) r |= t.reach[static_cast<std::size_t>(w)];
        t.reach[static_cast<std::size_t>(v)] = std::move(r);
    }
    return t;
}

ReachabilityTable reachability(const Digraph& g) { return reachability(g, g.vertices()); }

VertexSet unique_one_kernel(const Digraph& g, const VertexSet& within) {
    auto topo = topological_order(g, within);
    if (!topo)
        throw validation_error(validation_error::kind::not_acyclic,
                               "1-kernel uniqueness requires an acyclic digraph");
    VertexSet kernel(g.order());
    for (int v : *topo)
        if (!(g.in(v) & within).intersects(kernel)) kernel.set(v);
    return kernel;
}

VertexSet unique_one_kernel(const Digraph& g) { return unique_one_kernel(g, g.vertices()); }

namespace {

int unique_source_in(const Digraph& g, const VertexSet& within) {
    int src = -1;
    for (int v : within) {
        if (!g.in(v).intersects(within)) {
            if (src >= 0)
                throw validation_error(validation_error::kind::bad_precondition,
                                       "digraph has more than one source");
            src = v;
        }
    }
    if (src < 0)
        throw validation_error(validation_error::kind::missing_source, "digraph has no source");
    return src;
}

} // namespace

VertexSet k_cover_set(const Digraph& g, int k) {
    if (k < 0)
        throw validation_error(validation_error::kind::bad_precondition, "cover radius must be >= 0");
    if (g.order() == 0)
        throw validation_error(validation_error::kind::bad_precondition, "empty digraph");
    if (!topological_order(g))
        throw validation_error(validation_error::kind::not_acyclic, "k_cover_set requires an acyclic digraph");

    VertexSet X(g.order());
    VertexSet alive = g.vertices();
    // Deleting a reach set removes no edges among the survivors, so the
    // unique source is preserved round to round.
    while (true) {
        int root = unique_source_in(g, alive);
        if (alive.count() <= k) {
            X.set(root);
            break;
        }
        ReachabilityTable t = reachability(g, alive);
        int pick = -1, pick_size = 0;
        for (int v : alive) {
            int s = t.count(v);
            if (s >= k + 1 && (pick < 0 || s < pick_size)) {
                pick = v;
                pick_size = s;
            }
        }
        if (pick < 0) throw invariant_violation("no vertex with reach set of size >= k+1");
        X.set(pick);
        if (pick == root) break;
        alive -= t.reach[static_cast<std::size_t>(pick)];
    }
    return X;
}

KernelCertificate k_kernel_single_source_acyclic(const Digraph& g, int k) {
    if (k < 1)
        throw validation_error(validation_error::kind::bad_precondition, "kernel radius must be >= 1");
    if (g.order() < 2)
        throw validation_error(validation_error::kind::bad_precondition, "need at least two vertices");
    VertexSet X = k_cover_set(g, k - 1);
    VertexSet K = unique_one_kernel(g, X);
    Rational bound(g.order() - 2 + k, k); // 1 + (n-2)/k
    auto check = verify_kernel(g, K, k, bound);
    if (!check.ok()) throw invariant_violation("acyclic k-kernel failed verification: " + check.failure->message());
    return *check.cert;
}

EdgeBipartition edge_bipartition(const Digraph& g, const std::vector<int>& order) {
    int n = g.order();
    EdgeBipartition b;
    b.order = order;
    b.position.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) b.position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> fwd(static_cast<std::size_t>(n), VertexSet(n));
    std::vector<VertexSet> bwd(static_cast<std::size_t>(n), VertexSet(n));
    for (int u = 0; u < n; ++u)
        for (int v : g.out(u)) {
            if (b.position[static_cast<std::size_t>(u)] < b.position[static_cast<std::size_t>(v)])
                fwd[static_cast<std::size_t>(u)].set(v);
            else
                bwd[static_cast<std::size_t>(u)].set(v);
        }
    b.forward = Digraph::from_out_rows(std::move(fwd));
    b.backward = Digraph::from_out_rows(std::move(bwd));
    return b;
}

KernelCertificate k_kernel_arborescence(const Digraph& g, int k) {
    if (k < 2)
        throw validation_error(validation_error::kind::bad_precondition, "kernel radius must be >= 2");
    if (g.order() < 2)
        throw validation_error(validation_error::kind::bad_precondition, "need at least two vertices");
    auto arb = spanning_arborescence(g);
    if (!arb)
        throw validation_error(validation_error::kind::bad_precondition, "no spanning arborescence");
    EdgeBipartition bip = edge_bipartition(g, arb->order);
    KernelCertificate fwd_kernel = k_kernel_single_source_acyclic(bip.forward, k - 1);
    VertexSet K = unique_one_kernel(bip.backward, fwd_kernel.kernel);
    Rational bound(g.order() - 2 + (k - 1), k - 1); // 1 + (n-2)/(k-1)
    auto check = verify_kernel(g, K, k, bound);
    if (!check.ok())
        throw invariant_violation("arborescence k-kernel failed verification: " + check.failure->message());
    return *check.cert;
}

Digraph tight_instance(int k, int m) {
    if (k < 2 || m < 1)
        throw validation_error(validation_error::kind::bad_precondition,
                               "tight family needs k >= 2 and m >= 1");
    int n = 2 + m * k;
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(1 + m * k));
    es.push_back({0, 1}); // y -> x
    for (int j = 0; j < m; ++j) {
        int head = 2 + j * k;
        es.push_back({1, head});
        for (int i = 0; i + 1 < k; ++i) es.push_back({head + i, head + i + 1});
    }
    return Digraph(n, es);
}

} // namespace dgk
