#ifndef DGK_ORACLE_HPP
#define DGK_ORACLE_HPP

#include <functional>
#include <optional>
#include <utility>

#include "dgk/digraph.hpp"
#include "dgk/partition.hpp"

namespace dgk {

inline constexpr int kDefaultOracleGuard = 20;

// Minimum-cardinality stable k-covering set, with one witness, found by
// enumerating subsets in increasing cardinality (and increasing mask
// value within a cardinality). Nullopt when no k-kernel exists.
std::optional<std::pair<int, VertexSet>> min_k_kernel_bruteforce(const Digraph& g, int k,
                                                                 int size_guard = kDefaultOracleGuard);

// Calls fn for every k-kernel (all cardinalities); stop early by
// returning false from fn.
void for_each_k_kernel(const Digraph& g, int k, const std::function<bool(const VertexSet&)>& fn,
                       int size_guard = kDefaultOracleGuard);

struct ConjectureVerdict {
    enum class kind { vacuous, holds, counterexample };
    kind which;
    VertexSet witness; // kernel when holds
    bool holds() const { return which == kind::holds; }
};

// Source-free digraphs are expected to admit a 2-kernel of size at most
// |G|/2; graphs with a source are vacuous.
ConjectureVerdict check_small_qk_conjecture(const Digraph& g, int size_guard = kDefaultOracleGuard);

// A 2-kernel is strong when every T-vertex is 1-covered by the kernel or
// 2-covered from inside the kernel's tournament part.
bool is_strong_two_kernel(const Digraph& g, const SplitPartition& split, const VertexSet& K);

struct LemmaVerdict {
    bool holds = false;
    int failing_vertex = -1; // T-vertex with no witness, when !holds
};

// For every T-vertex contained in no strong 2-kernel there must be a
// neighbour w adjacent to it with N-(w) inside N-(v), a problem for v
// whenever w lands in S.
LemmaVerdict check_goodvert_lemma(const Digraph& g, const SplitPartition& split,
                                  int size_guard = kDefaultOracleGuard);

// Every digraph admits a 2-kernel.
bool two_kernel_exists(const Digraph& g, int size_guard = kDefaultOracleGuard);

// Some 2-kernel K has |N+[K]| >= |G|/2.
std::optional<VertexSet> large_closed_neighbourhood_two_kernel(const Digraph& g,
                                                               int size_guard = kDefaultOracleGuard);

} // namespace dgk

#endif
