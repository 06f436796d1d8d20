#include "dgk/partition.hpp"

#include "dgk/cover.hpp"
#include "dgk/structure.hpp"

namespace dgk {

PartitionClass classify_partition(const Digraph& g, const VertexSet& S, const VertexSet& T) {
    PartitionClass out;
    if (S.universe() != g.order() || T.universe() != g.order()) {
        out.reason = "partition sets sized for a different digraph";
        return out;
    }
    if (S.intersects(T)) {
        out.reason = "S and T intersect";
        return out;
    }
    if ((S | T) != g.vertices()) {
        out.reason = "S and T do not cover V";
        return out;
    }
    if (!g.is_oriented()) {
        auto d = g.digons();
        out.reason = "digraph not oriented: digon between " + std::to_string(d[0].first) + " and " +
                     std::to_string(d[0].second);
        return out;
    }
    for (int u : T) {
        for (int v : T) {
            if (v <= u) continue;
            if (!g.adjacent(u, v)) {
                out.reason = "T not a tournament: " + std::to_string(u) + " and " + std::to_string(v) +
                             " nonadjacent";
                return out;
            }
        }
    }
    if (is_stable(g, S)) {
        out.which = PartitionClass::kind::valid_split;
        return out;
    }
    if (topological_order(g, S)) {
        out.which = PartitionClass::kind::valid_break;
        return out;
    }
    out.reason = "S neither stable nor acyclic";
    return out;
}

SplitPartition require_valid_split(const Digraph& g, const VertexSet& S) {
    VertexSet T = g.vertices() - S;
    PartitionClass c = classify_partition(g, S, T);
    if (!c.is_split())
        throw validation_error(validation_error::kind::bad_precondition,
                               "not a valid split: " + (c.reason.empty() ? "S not stable" : c.reason));
    return SplitPartition{S, T};
}

BreakPartition require_valid_break(const Digraph& g, const VertexSet& S) {
    VertexSet T = g.vertices() - S;
    PartitionClass c = classify_partition(g, S, T);
    if (!c.is_break())
        throw validation_error(validation_error::kind::bad_precondition, "not a valid break: " + c.reason);
    return BreakPartition{S, T};
}

} // namespace dgk
