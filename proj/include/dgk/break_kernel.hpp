#ifndef DGK_BREAK_KERNEL_HPP
#define DGK_BREAK_KERNEL_HPP

#include <span>
#include <vector>

#include "dgk/digraph.hpp"
#include "dgk/partition.hpp"

namespace dgk {

// Nonnegative integer weight per vertex.
struct WeightMap {
    std::vector<long long> w;

    static WeightMap uniform(int n, long long value) {
        WeightMap f;
        f.w.assign(static_cast<std::size_t>(n), value);
        return f;
    }
    long long total() const {
        long long t = 0;
        for (long long x : w) t += x;
        return t;
    }
    long long sum(const VertexSet& over) const {
        long long t = 0;
        for (int v : over) t += w[static_cast<std::size_t>(v)];
        return t;
    }
};

// A 2-kernel that is "special" for a break (S,T): either a subset of S,
// or one tournament vertex together with the unique 1-kernel of its
// non-neighbourhood. Its closed out-neighbourhood carries at least half
// the total weight.
struct SpecialKernel {
    VertexSet kernel;
    bool anchored = false;
    int anchor = -1;          // the tournament vertex, when anchored
    long long coverage = 0;   // f(N+[K]), closed
};

// Vertices different from and nonadjacent with v.
VertexSet non_neighbourhood(const Digraph& g, int v);

// The recursive construction: prune tournament vertices whose anchored
// candidate fails (moving their weight to an uncovered witness), promote
// sinks of G[S] into the tournament (completing their neighbourhood when
// needed and mapping the result back), and finish in a tournament by
// taking the vertex with the heaviest closed out-neighbourhood.
SpecialKernel large_two_kernel(const Digraph& g, const BreakPartition& brk, const WeightMap& f);

// Same construction evaluated for several weight maps in one structural
// pass; element i matches large_two_kernel(g, brk, fs[i]).
std::vector<SpecialKernel> large_two_kernel_batch(const Digraph& g, const BreakPartition& brk,
                                                  std::span<const WeightMap> fs);

enum class NPlusMode { open, closed };

struct MixedVerdict {
    bool holds = false;
    VertexSet witness;
};

// Brute-force search for a 2-kernel K with
// |K| + f(V)/2 <= |G|/2 + f(N+(K)), in the requested neighbourhood
// reading.
MixedVerdict check_mixed_conjecture(const Digraph& g, const WeightMap& f,
                                    NPlusMode mode = NPlusMode::open, int size_guard = 18);

} // namespace dgk

#endif
