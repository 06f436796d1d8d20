#ifndef DGK_ACYCLIC_KERNELS_HPP
#define DGK_ACYCLIC_KERNELS_HPP

#include <vector>

#include "dgk/cover.hpp"
#include "dgk/digraph.hpp"

namespace dgk {

// Per-vertex sets of vertices reachable by directed paths of any length
// (each set contains its own vertex). Requires an acyclic digraph.
struct ReachabilityTable {
    std::vector<VertexSet> reach;
    int count(int v) const { return reach[static_cast<std::size_t>(v)].count(); }
};

ReachabilityTable reachability(const Digraph& g);
// Restricted to the induced subgraph on `within`; entries outside it are
// empty.
ReachabilityTable reachability(const Digraph& g, const VertexSet& within);

// The one stable set that 1-covers an acyclic digraph: scanning a
// topological order, a vertex joins exactly when none of its
// in-neighbours has joined.
VertexSet unique_one_kernel(const Digraph& g);
VertexSet unique_one_kernel(const Digraph& g, const VertexSet& within);

// For an acyclic digraph with one source: a set X k-covering V with
// |X| <= 1+(|G|-1)/(k+1), and additionally |G|=1 or
// |X| <= 1+(|G|-2)/(k+1) or X not stable. Repeatedly grabs the vertex
// whose reach set is smallest among those of size >= k+1 and deletes
// that reach set (smallest id on ties).
VertexSet k_cover_set(const Digraph& g, int k);

// k >= 1, acyclic, one source, |G| >= 2: k-kernel of size at most
// 1+(|G|-2)/k, obtained as the 1-kernel of the digraph induced on a
// (k-1)-cover set.
KernelCertificate k_kernel_single_source_acyclic(const Digraph& g, int k);

// Edge bipartition along a vertex numbering: A holds the edges pointing
// forward in the numbering, B the rest; both sides acyclic, and A has a
// unique source when the numbering starts at an arborescence root.
struct EdgeBipartition {
    std::vector<int> order;    // position -> vertex id
    std::vector<int> position; // vertex id -> position
    Digraph forward;           // edges of A, original ids
    Digraph backward;          // edges of B, original ids
};

EdgeBipartition edge_bipartition(const Digraph& g, const std::vector<int>& order);

// k >= 2, |G| >= 2, spanning arborescence required: k-kernel of size at
// most 1+(|G|-2)/(k-1). A (k-1)-kernel of the forward digraph is thinned
// to a 1-kernel of the backward digraph it induces.
KernelCertificate k_kernel_arborescence(const Digraph& g, int k);

// Family on 2+m*k vertices (y -> x -> m directed paths of k vertices)
// whose minimum k-kernel has size exactly m+1 = 1+(|G|-2)/k.
Digraph tight_instance(int k, int m);

} // namespace dgk

#endif
