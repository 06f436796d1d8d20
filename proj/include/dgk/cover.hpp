#ifndef DGK_COVER_HPP
#define DGK_COVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "dgk/digraph.hpp"
#include "dgk/rational.hpp"

namespace dgk {

// All vertices reachable from X by a directed path of length <= k.
VertexSet reach_within(const Digraph& g, const VertexSet& from, int k);

// Out-neighbourhood of a set.
VertexSet out_neighbours(const Digraph& g, const VertexSet& of);

// Closed out-neighbourhood N+[X] = X together with its out-neighbours.
VertexSet closed_out_neighbours(const Digraph& g, const VertexSet& of);

// True iff every y in Y is reachable from some x in X by a path of
// length <= k.
bool k_covers(const Digraph& g, const VertexSet& X, const VertexSet& Y, int k);
bool k_covers(const Digraph& g, int x, int y, int k);

// Per-vertex masks of everything v covers within distance k.
std::vector<VertexSet> cover_masks(const Digraph& g, int k);

// No edge with both ends in X.
bool is_stable(const Digraph& g, const VertexSet& X);
// First offending edge inside X, if any.
std::optional<Edge> stability_violation(const Digraph& g, const VertexSet& X);

// A k-kernel claim: stable set covering everything within distance k,
// with an exact rational size bound. Witness paths are shortest paths
// recomputed on demand, never cached here.
struct KernelCertificate {
    VertexSet kernel;
    int k = 0;
    Rational claimed_bound;
};

struct KernelFailure {
    enum class kind { not_stable, uncovered, bound_exceeded };
    kind which;
    Edge violating_edge{-1, -1}; // for not_stable
    int uncovered_vertex = -1;   // for uncovered
    std::string message() const;
};

struct KernelCheck {
    std::optional<KernelCertificate> cert; // engaged iff the claim holds
    std::optional<KernelFailure> failure;
    bool ok() const { return cert.has_value(); }
};

// Checks stability and k-coverage of V(G); on success returns a
// certificate whose bound defaults to |X| when none is supplied.
KernelCheck verify_kernel(const Digraph& g, const VertexSet& X, int k,
                          std::optional<Rational> claimed_bound = std::nullopt);

// Shortest witness path from the kernel to y (ids along the path,
// starting inside X), or nullopt when y is out of reach. Deterministic:
// smallest-id predecessor at every hop.
std::optional<std::vector<int>> witness_path(const Digraph& g, const VertexSet& X, int y, int k);

// One witness per vertex; requires the certificate to be valid for g.
std::vector<std::vector<int>> certificate_witnesses(const Digraph& g, const KernelCertificate& cert);

} // namespace dgk

#endif
