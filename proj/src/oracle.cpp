#include "dgk/oracle.hpp"

#include <cstdint>
#include <string>

#include "dgk/cover.hpp"

namespace dgk {

namespace {

void require_guard(const Digraph& g, int size_guard) {
    if (g.order() > size_guard)
        throw size_guard_error("instance with " + std::to_string(g.order()) +
                               " vertices exceeds the brute-force guard of " + std::to_string(size_guard));
    if (size_guard > 30)
        throw size_guard_error("brute-force guard larger than 30 is not supported");
}

struct MaskTables {
    int n;
    std::vector<std::uint32_t> adj;  // out-neighbours as mask
    std::vector<std::uint32_t> cov;  // k-cover mask per vertex
    std::uint32_t all;

    MaskTables(const Digraph& g, int k) : n(g.order()) {
        adj.resize(static_cast<std::size_t>(n));
        cov.resize(static_cast<std::size_t>(n));
        all = n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
        for (int v = 0; v < n; ++v) {
            std::uint32_t row = 0;
            for (int w : g.out(v)) row |= std::uint32_t{1} << w;
            adj[static_cast<std::size_t>(v)] = row;
            cov[static_cast<std::size_t>(v)] = std::uint32_t{1} << v;
        }
        for (int step = 0; step < k; ++step) {
            std::vector<std::uint32_t> next = cov;
            for (int v = 0; v < n; ++v) {
                std::uint32_t row = adj[static_cast<std::size_t>(v)];
                while (row) {
                    int w = std::countr_zero(row);
                    row &= row - 1;
                    next[static_cast<std::size_t>(v)] |= cov[static_cast<std::size_t>(w)];
                }
            }
            cov = std::move(next);
        }
    }

    bool stable(std::uint32_t X) const {
        std::uint32_t rest = X;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[static_cast<std::size_t>(v)] & X) return false;
        }
        return true;
    }
    bool covers_all(std::uint32_t X) const {
        std::uint32_t got = 0;
        std::uint32_t rest = X;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            got |= cov[static_cast<std::size_t>(v)];
        }
        return got == all;
    }
};

VertexSet mask_to_set(int n, std::uint32_t mask) {
    VertexSet s(n);
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        s.set(v);
    }
    return s;
}

// Next mask with the same popcount (Gosper), or 0 on wrap.
std::uint32_t next_same_popcount(std::uint32_t v) {
    std::uint32_t c = v & (0u - v);
    std::uint32_t r = v + c;
    if (r == 0) return 0;
    return (((r ^ v) >> 2) / c) | r;
}

} // namespace

std::optional<std::pair<int, VertexSet>> min_k_kernel_bruteforce(const Digraph& g, int k, int size_guard) {
    require_guard(g, size_guard);
    int n = g.order();
    if (n == 0) return std::make_pair(0, VertexSet(0));
    MaskTables t(g, k);
    for (int c = 1; c <= n; ++c) {
        std::uint32_t m = (std::uint32_t{1} << c) - 1;
        while (m && !(m & ~t.all)) {
            if (t.stable(m) && t.covers_all(m)) return std::make_pair(c, mask_to_set(n, m));
            m = next_same_popcount(m);
        }
    }
    return std::nullopt;
}

void for_each_k_kernel(const Digraph& g, int k, const std::function<bool(const VertexSet&)>& fn,
                       int size_guard) {
    require_guard(g, size_guard);
    int n = g.order();
    MaskTables t(g, k);
    std::uint32_t total = n >= 31 ? 0 : (std::uint32_t{1} << n);
    for (std::uint32_t m = 1; m != total; ++m)
        if (t.stable(m) && t.covers_all(m))
            if (!fn(mask_to_set(n, m))) return;
}

ConjectureVerdict check_small_qk_conjecture(const Digraph& g, int size_guard) {
    if (g.sources().any()) return {ConjectureVerdict::kind::vacuous, VertexSet(g.order())};
    auto best = min_k_kernel_bruteforce(g, 2, size_guard);
    if (best && 2 * best->first <= g.order())
        return {ConjectureVerdict::kind::holds, best->second};
    return {ConjectureVerdict::kind::counterexample, best ? best->second : VertexSet(g.order())};
}

bool is_strong_two_kernel(const Digraph& g, const SplitPartition& split, const VertexSet& K) {
    if (!verify_kernel(g, K, 2).ok()) return false;
    VertexSet one_covered = closed_out_neighbours(g, K);
    VertexSet kt = K & split.T;
    VertexSet two_from_t = reach_within(g, kt, 2);
    for (int v : split.T)
        if (!one_covered.test(v) && !two_from_t.test(v)) return false;
    return true;
}

LemmaVerdict check_goodvert_lemma(const Digraph& g, const SplitPartition& split, int size_guard) {
    require_guard(g, size_guard);
    VertexSet in_some_strong(g.order());
    for_each_k_kernel(g, 2, [&](const VertexSet& K) {
        if (is_strong_two_kernel(g, split, K)) in_some_strong |= K;
        return true;
    }, size_guard);
    auto cov2 = cover_masks(g, 2);
    for (int v : split.T) {
        if (in_some_strong.test(v)) continue;
        bool found = false;
        for (int w : g.in(v)) {
            if (!g.in(w).is_subset_of(g.in(v))) continue;
            if (split.S.test(w)) {
                // w must be a problem for v: v adjacent from w, not
                // 2-covering w, and no S-non-neighbour of v 2-covers w.
                if (cov2[static_cast<std::size_t>(v)].test(w)) continue;
                VertexSet others = split.S;
                others.reset(w);
                bool covered_elsewhere = false;
                for (int s : others) {
                    if (g.adjacent(s, v)) continue;
                    if (cov2[static_cast<std::size_t>(s)].test(w)) { covered_elsewhere = true; break; }
                }
                if (covered_elsewhere) continue;
            }
            found = true;
            break;
        }
        if (!found) return {false, v};
    }
    return {true, -1};
}

bool two_kernel_exists(const Digraph& g, int size_guard) {
    return min_k_kernel_bruteforce(g, 2, size_guard).has_value();
}

std::optional<VertexSet> large_closed_neighbourhood_two_kernel(const Digraph& g, int size_guard) {
    require_guard(g, size_guard);
    int n = g.order();
    std::optional<VertexSet> found;
    for_each_k_kernel(g, 2, [&](const VertexSet& K) {
        if (2 * closed_out_neighbours(g, K).count() >= n) {
            found = K;
            return false;
        }
        return true;
    }, size_guard);
    return found;
}

} // namespace dgk
