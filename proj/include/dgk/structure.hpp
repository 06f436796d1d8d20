#ifndef DGK_STRUCTURE_HPP
#define DGK_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "dgk/digraph.hpp"

namespace dgk {

// Vertex order with every edge pointing forward, or nullopt when G has a
// directed cycle. Deterministic: smallest id among the available vertices
// at every step.
std::optional<std::vector<int>> topological_order(const Digraph& g);

// Same, restricted to the induced subgraph on `within` (ids unchanged).
std::optional<std::vector<int>> topological_order(const Digraph& g, const VertexSet& within);

struct Arborescence {
    int root = -1;
    std::vector<int> parent; // -1 at the root
    std::vector<int> order;  // BFS level order, ids ascending within a level
};

// Spanning arborescence rooted at the smallest vertex that reaches all
// others; parent of v is its smallest-id in-neighbour one level closer to
// the root. Nullopt when no vertex reaches everything.
std::optional<Arborescence> spanning_arborescence(const Digraph& g);

// Subgraph induced on `keep`, vertices renumbered 0..k-1 in id order;
// old_ids[new_id] recovers the original id.
Digraph induced_subgraph(const Digraph& g, const VertexSet& keep, std::vector<int>* old_ids = nullptr);

Digraph add_edges(const Digraph& g, std::span<const Edge> extra);

struct DigonReduction {
    Digraph reduced;
    std::vector<int> survivor_ids; // reduced id -> original id
    std::vector<Edge> removed_edges;
    struct VertexDeletion {
        int anchor;               // original id; re-adding it preserves 2-kernels
        std::vector<int> removed; // original ids, anchor included
    };
    std::vector<VertexDeletion> deletions;
};

// Removes every digon from a source-free digraph: per digon delete one
// edge when that leaves no source (preferring u->v with u<v), otherwise
// delete both ends with all their out-neighbours; sources exposed by a
// vertex deletion are purged the same way (vertex plus out-neighbours,
// anchored at the source). The result is oriented and source-free, and a
// 2-kernel of the result plus the logged anchors is a 2-kernel of the
// input.
DigonReduction reduce_digons(const Digraph& g);

// Maps a 2-kernel of the reduced digraph back to the original.
VertexSet extend_kernel(const DigonReduction& red, const VertexSet& reduced_kernel, int original_n);

} // namespace dgk

#endif
