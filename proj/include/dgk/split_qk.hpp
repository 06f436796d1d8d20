#ifndef DGK_SPLIT_QK_HPP
#define DGK_SPLIT_QK_HPP

#include <vector>

#include "dgk/cover.hpp"
#include "dgk/digraph.hpp"
#include "dgk/partition.hpp"

namespace dgk {

// The S-vertices blocking v from every 2-kernel: in-neighbours of v that
// v does not 2-cover and that no S-non-neighbour of v 2-covers.
VertexSet problems_of(const Digraph& g, const SplitPartition& split, int v);

// The bookkeeping extracted from the split construction: problem vertices
// B with chosen problems Z, the S-vertices Q fed only from B, the classes
// Phi partitioning everything else across the auxiliary digraph H, and
// doubled scores (2*phi_minus + phi_zero) kept in exact integers.
struct SplitAnalysis {
    SplitPartition split;
    VertexSet B;          // T-vertices with problems
    std::vector<int> zb;  // chosen problem per B-vertex, -1 elsewhere
    VertexSet Z;
    VertexSet Q;          // S\Z with all in-neighbours inside B
    std::vector<int> bq;  // chosen B in-neighbour per Q-vertex, -1 elsewhere
    std::vector<int> ts;  // chosen T\B in-neighbour per S\(Q u Z)-vertex, -1 elsewhere

    VertexSet H;                    // (T\B) u Z
    std::vector<VertexSet> h_out;   // H adjacency over original ids
    std::vector<VertexSet> h_in;
    std::vector<VertexSet> phi;     // Phi classes, empty outside H
    std::vector<long long> phi_plus, phi_minus, phi_zero;
    std::vector<long long> score2;  // 2*phi_minus + phi_zero on H

    long long min_score2 = 0;
    int min_score_vertex = -1; // smallest id among minimizers
};

// Requires a valid split with S nonempty and no source inside S.
SplitAnalysis split_analysis(const Digraph& g, const SplitPartition& split);

// A verified 2-kernel of size at most |G|/2 for a split digraph with
// S nonempty and no S-source, built by the minimum-score case analysis.
KernelCertificate small_quasi_kernel(const Digraph& g, const SplitPartition& split);

// Same conclusion for any source-free split digraph: an empty S leaves a
// tournament, covered by its maximum-out-degree vertex.
KernelCertificate small_quasi_kernel_general(const Digraph& g, const SplitPartition& split);

// Maximum out-degree vertex, smallest id on ties.
int tournament_king(const Digraph& g);

} // namespace dgk

#endif
