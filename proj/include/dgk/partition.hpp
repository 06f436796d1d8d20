#ifndef DGK_PARTITION_HPP
#define DGK_PARTITION_HPP

#include <string>

#include "dgk/digraph.hpp"

namespace dgk {

// (S,T) with S stable and G[T] a tournament, G oriented throughout.
struct SplitPartition {
    VertexSet S;
    VertexSet T;
};

// (S,T) with G[S] acyclic and G[T] a tournament; generalizes a split.
struct BreakPartition {
    VertexSet S;
    VertexSet T;
};

struct PartitionClass {
    enum class kind { valid_split, valid_break, invalid };
    kind which = kind::invalid;
    std::string reason; // first violated invariant when invalid
    bool is_split() const { return which == kind::valid_split; }
    bool is_break() const { return which != kind::invalid; } // a split is also a break
};

// Checks the partition invariants in a fixed order: partition of V,
// orientedness, tournament on T, then stable (split) or acyclic (break)
// on S.
PartitionClass classify_partition(const Digraph& g, const VertexSet& S, const VertexSet& T);

// Throwing preconditions used by the kernel constructions.
SplitPartition require_valid_split(const Digraph& g, const VertexSet& S);
BreakPartition require_valid_break(const Digraph& g, const VertexSet& S);

} // namespace dgk

#endif
