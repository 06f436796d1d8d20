#include "dgk/canonical.hpp"

#include <algorithm>
#include <unordered_set>

#include "dgk/errors.hpp"

namespace dgk {

Digraph SmallDigraph::to_digraph() const {
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), VertexSet(n));
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (edge(v, w)) rows[static_cast<std::size_t>(v)].set(w);
    return Digraph::from_out_rows(std::move(rows));
}

bool SmallDigraph::has_source() const {
    std::uint8_t covered = 0;
    for (int v = 0; v < n; ++v) covered |= row[static_cast<std::size_t>(v)];
    return covered != ((1u << n) - 1u);
}

namespace {

constexpr PackedCode kCodeMax = ~PackedCode{0};

// Pair states are packed in column order (j = 1..n-1, i < j), first pair
// in the HIGHEST bits, so that integer order on packed codes equals
// lexicographic order on state sequences.
struct Searcher {
    const SmallDigraph& g;
    const int* colour;
    int forced_last;
    int total_bits;
    int pos_colour[8] = {};
    PackedCode best = kCodeMax;
    int place[8] = {};
    bool used[8] = {};
    bool collect = false; // gather min-achieving placements
    std::vector<std::array<int, 8>> placements;

    Searcher(const SmallDigraph& gg, const int* col, int forced)
        : g(gg), colour(col), forced_last(forced), total_bits(gg.n * (gg.n - 1)) {
        if (colour) {
            std::array<int, 8> order{};
            for (int v = 0; v < g.n; ++v) order[static_cast<std::size_t>(v)] = v;
            std::stable_sort(order.begin(), order.begin() + g.n,
                             [&](int a, int b) { return colour[a] < colour[b]; });
            for (int p = 0; p < g.n; ++p) pos_colour[p] = colour[order[static_cast<std::size_t>(p)]];
        }
    }

    // eq: the prefix built so far equals the prefix of `best`. A stale
    // false only costs pruning; the final compare below stays safe.
    void dfs(int pos, PackedCode cur, int nb, bool eq) {
        if (pos == g.n) {
            if (cur < best) {
                best = cur;
                if (collect) placements.clear();
            }
            if (collect && cur == best) {
                std::array<int, 8> perm{};
                for (int p = 0; p < g.n; ++p) perm[static_cast<std::size_t>(p)] = place[p];
                placements.push_back(perm);
            }
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (used[v]) continue;
            if (colour && colour[v] != pos_colour[pos]) continue;
            if (forced_last >= 0) {
                if (pos == g.n - 1 && v != forced_last) continue;
                if (pos < g.n - 1 && v == forced_last) continue;
            }
            PackedCode ext = cur;
            int nb2 = nb;
            bool e = eq;
            bool prune = false;
            for (int i = 0; i < pos; ++i) {
                auto st = static_cast<PackedCode>(g.state(place[i], v));
                int shift = total_bits - 2 - nb2;
                ext |= st << shift;
                if (e) {
                    PackedCode ref = (best >> shift) & 3u;
                    if (st > ref) { prune = true; break; }
                    if (st < ref) {
                        if (collect) { prune = true; break; } // only equality survives in pass 2
                        e = false;
                    }
                }
                nb2 += 2;
            }
            if (prune) continue;
            place[pos] = v;
            used[v] = true;
            dfs(pos + 1, ext, nb2, e);
            used[v] = false;
        }
    }
};

} // namespace

PackedCode canonical_code(const SmallDigraph& g, const int* colour, int forced_last) {
    if (g.n <= 1) return 0;
    Searcher s(g, colour, forced_last);
    s.dfs(0, 0, 0, true);
    return s.best;
}

std::vector<std::array<int, 8>> automorphisms(const SmallDigraph& g, const int* colour) {
    std::vector<std::array<int, 8>> result;
    if (g.n == 0) return result;
    Searcher pass1(g, colour, -1);
    pass1.dfs(0, 0, 0, true);
    Searcher pass2(g, colour, -1);
    pass2.best = pass1.best;
    pass2.collect = true;
    pass2.dfs(0, 0, 0, true);
    // Two min-achieving placements compose to an automorphism.
    const auto& base = pass2.placements.front();
    int inv[8];
    for (int p = 0; p < g.n; ++p) inv[base[static_cast<std::size_t>(p)]] = p;
    for (const auto& perm : pass2.placements) {
        std::array<int, 8> a{};
        for (int v = 0; v < g.n; ++v)
            a[static_cast<std::size_t>(v)] = perm[static_cast<std::size_t>(inv[v])];
        result.push_back(a);
    }
    return result;
}

SmallDigraph canonical_image(const SmallDigraph& g, const int* colour) {
    SmallDigraph img;
    img.n = g.n;
    if (g.n <= 1) return img;
    PackedCode code = canonical_code(g, colour);
    int total_bits = g.n * (g.n - 1);
    int nb = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            auto st = (code >> (total_bits - 2 - nb)) & 3u;
            if (st & 1u) img.add(i, j);
            if (st & 2u) img.add(j, i);
            nb += 2;
        }
    return img;
}

std::vector<SmallDigraph> digraph_representatives(int n, int states) {
    if (n < 1 || n > 8)
        throw size_guard_error("representatives supported for 1..8 vertices");
    if (states != 3 && states != 4)
        throw validation_error(validation_error::kind::bad_precondition, "states must be 3 or 4");
    std::vector<SmallDigraph> level;
    level.push_back(SmallDigraph{1, {}});
    for (int m = 1; m < n; ++m) {
        std::vector<SmallDigraph> next;
        for (const auto& parent : level) {
            auto auts = automorphisms(parent);
            std::uint64_t total = 1;
            for (int i = 0; i < m; ++i) total *= static_cast<std::uint64_t>(states);
            std::array<int, 8> pattern{};
            for (std::uint64_t pid = 0; pid < total; ++pid) {
                std::uint64_t x = pid;
                for (int i = 0; i < m; ++i) {
                    pattern[static_cast<std::size_t>(i)] = static_cast<int>(x % states);
                    x /= static_cast<std::uint64_t>(states);
                }
                // Keep one pattern per orbit of the parent's automorphisms.
                bool minimal = true;
                for (const auto& a : auts) {
                    bool ident = true;
                    for (int i = 0; i < m && ident; ++i) ident = a[static_cast<std::size_t>(i)] == i;
                    if (ident) continue;
                    for (int i = 0; i < m; ++i) {
                        int pv = pattern[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
                        if (pv < pattern[static_cast<std::size_t>(i)]) { minimal = false; break; }
                        if (pv > pattern[static_cast<std::size_t>(i)]) break;
                    }
                    if (!minimal) break;
                }
                if (!minimal) continue;
                SmallDigraph child = parent;
                child.n = m + 1;
                for (int i = 0; i < m; ++i) {
                    int st = pattern[static_cast<std::size_t>(i)];
                    if (st & 1) child.add(m, i);
                    if (st & 2) child.add(i, m);
                }
                // Accept when the new vertex sits in the canonical
                // deletion orbit.
                if (canonical_code(child, nullptr, m) == canonical_code(child)) next.push_back(child);
            }
        }
        level = std::move(next);
    }
    return level;
}

namespace {

std::vector<RepWithAuts> dedup_to_reps(std::vector<SmallDigraph> labelled) {
    std::unordered_set<PackedCode> seen;
    std::vector<std::pair<PackedCode, SmallDigraph>> reps;
    for (const auto& g : labelled) {
        PackedCode c = canonical_code(g);
        if (seen.insert(c).second) reps.push_back({c, canonical_image(g)});
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RepWithAuts> out;
    out.reserve(reps.size());
    for (auto& [c, g] : reps) out.push_back({g, automorphisms(g)});
    return out;
}

} // namespace

std::vector<RepWithAuts> tournament_representatives(int n) {
    if (n < 0 || n > 8) throw size_guard_error("tournament representatives supported up to 8 vertices");
    if (n == 0) return {RepWithAuts{SmallDigraph{0, {}}, {}}};
    int pairs = n * (n - 1) / 2;
    std::vector<SmallDigraph> all;
    all.reserve(std::size_t{1} << pairs);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        SmallDigraph g;
        g.n = n;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit) {
                if ((mask >> bit) & 1u)
                    g.add(i, j);
                else
                    g.add(j, i);
            }
        all.push_back(g);
    }
    return dedup_to_reps(std::move(all));
}

std::vector<RepWithAuts> acyclic_representatives(int n) {
    if (n < 0 || n > 7) throw size_guard_error("acyclic representatives supported up to 7 vertices");
    if (n == 0) return {RepWithAuts{SmallDigraph{0, {}}, {}}};
    int pairs = n * (n - 1) / 2;
    std::vector<SmallDigraph> all;
    all.reserve(std::size_t{1} << pairs);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        SmallDigraph g;
        g.n = n;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1u) g.add(i, j); // forward edges only: acyclic by labelling
        all.push_back(g);
    }
    return dedup_to_reps(std::move(all));
}

} // namespace dgk
