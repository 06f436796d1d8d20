#include "dgk/split_qk.hpp"

#include <string>

namespace dgk {

namespace {

void require_split_preconditions(const Digraph& g, const SplitPartition& split) {
    if (split.S.empty())
        throw validation_error(validation_error::kind::bad_precondition, "S must be nonempty");
    for (int s : split.S)
        if (g.in(s).empty())
            throw validation_error(validation_error::kind::has_source,
                                   "vertex " + std::to_string(s) + " in S is a source");
}

// Everything v reaches within two steps.
VertexSet reach2(const Digraph& g, int v) {
    VertexSet r = g.out(v);
    for (int w : g.out(v)) r |= g.out(w);
    r.set(v);
    return r;
}

// Same, with middle vertices restricted to avoid `blocked` (v itself is
// assumed outside `blocked`).
VertexSet reach2_avoiding(const Digraph& g, int v, const VertexSet& blocked) {
    VertexSet r = g.out(v);
    for (int w : g.out(v) - blocked) r |= g.out(w);
    r.set(v);
    return r;
}

} // namespace

VertexSet problems_of(const Digraph& g, const SplitPartition& split, int v) {
    if (!split.T.test(v))
        throw validation_error(validation_error::kind::bad_precondition,
                               "problems are defined for T-vertices only");
    VertexSet candidates = g.in(v) & split.S;
    if (candidates.empty()) return VertexSet(g.order());
    candidates -= reach2(g, v);
    if (candidates.empty()) return candidates;
    // Drop anything 2-covered by an S-vertex nonadjacent with v.
    VertexSet nonneighbours = (split.S - g.out(v)) - g.in(v);
    VertexSet covered(g.order());
    for (int s : nonneighbours) covered |= reach2(g, s);
    return candidates - covered;
}

SplitAnalysis split_analysis(const Digraph& g, const SplitPartition& split) {
    require_split_preconditions(g, split);
    int n = g.order();
    SplitAnalysis a;
    a.split = split;
    a.B = VertexSet(n);
    a.Z = VertexSet(n);
    a.Q = VertexSet(n);
    a.zb.assign(static_cast<std::size_t>(n), -1);
    a.bq.assign(static_cast<std::size_t>(n), -1);
    a.ts.assign(static_cast<std::size_t>(n), -1);

    for (int v : split.T) {
        VertexSet probs = problems_of(g, split, v);
        if (probs.any()) {
            a.B.set(v);
            int z = probs.first();
            a.zb[static_cast<std::size_t>(v)] = z;
            a.Z.set(z);
        }
    }
    for (int q : split.S - a.Z) {
        if (g.in(q).is_subset_of(a.B)) {
            a.Q.set(q);
            a.bq[static_cast<std::size_t>(q)] = g.in(q).first(); // nonempty: no S-source
        }
    }
    VertexSet rest = split.S - a.Q - a.Z;
    VertexSet tnb = split.T - a.B;
    for (int s : rest) {
        VertexSet from = g.in(s) & tnb;
        if (from.empty())
            throw invariant_violation("S-vertex " + std::to_string(s) +
                                      " outside Q has no in-neighbour in T\\B");
        a.ts[static_cast<std::size_t>(s)] = from.first();
    }

    a.H = tnb | a.Z;
    if (a.H.empty()) throw invariant_violation("auxiliary digraph is empty");

    a.phi.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (int q : a.Q) {
        int z = a.zb[static_cast<std::size_t>(a.bq[static_cast<std::size_t>(q)])];
        a.phi[static_cast<std::size_t>(z)].set(q);
    }
    for (int t : tnb) a.phi[static_cast<std::size_t>(t)].set(t);
    for (int s : rest) a.phi[static_cast<std::size_t>(a.ts[static_cast<std::size_t>(s)])].set(s);

    // Phi classes partition V \ (B u Z).
    VertexSet seen(n);
    for (int u : a.H) {
        if (seen.intersects(a.phi[static_cast<std::size_t>(u)]))
            throw invariant_violation("phi classes overlap");
        seen |= a.phi[static_cast<std::size_t>(u)];
    }
    if (seen != g.vertices() - a.B - a.Z) throw invariant_violation("phi classes miss vertices");

    // H keeps the induced edges and gains t->z for every nonadjacent pair.
    a.h_out.assign(static_cast<std::size_t>(n), VertexSet(n));
    a.h_in.assign(static_cast<std::size_t>(n), VertexSet(n));
    for (int u : a.H) a.h_out[static_cast<std::size_t>(u)] = g.out(u) & a.H;
    for (int t : tnb) {
        VertexSet extra = (a.Z - g.out(t)) - g.in(t);
        a.h_out[static_cast<std::size_t>(t)] |= extra;
    }
    for (int u : a.H)
        for (int w : a.h_out[static_cast<std::size_t>(u)]) a.h_in[static_cast<std::size_t>(w)].set(u);

    a.phi_plus.assign(static_cast<std::size_t>(n), 0);
    a.phi_minus.assign(static_cast<std::size_t>(n), 0);
    a.phi_zero.assign(static_cast<std::size_t>(n), 0);
    a.score2.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> phi_size(static_cast<std::size_t>(n), 0);
    long long q_total = 0;
    for (int u : a.H) phi_size[static_cast<std::size_t>(u)] = a.phi[static_cast<std::size_t>(u)].count();
    for (int z : a.Z) q_total += phi_size[static_cast<std::size_t>(z)];

    for (int u : a.H) {
        long long plus = 0, minus = 0;
        for (int w : a.h_out[static_cast<std::size_t>(u)]) plus += phi_size[static_cast<std::size_t>(w)];
        for (int w : a.h_in[static_cast<std::size_t>(u)]) minus += phi_size[static_cast<std::size_t>(w)];
        a.phi_plus[static_cast<std::size_t>(u)] = plus;
        a.phi_minus[static_cast<std::size_t>(u)] = minus;
        a.phi_zero[static_cast<std::size_t>(u)] =
            a.Z.test(u) ? q_total : phi_size[static_cast<std::size_t>(u)];
        a.score2[static_cast<std::size_t>(u)] = 2 * minus + a.phi_zero[static_cast<std::size_t>(u)];
    }

    long long balance = 0;
    for (int u : a.H)
        balance += static_cast<long long>(phi_size[static_cast<std::size_t>(u)]) *
                   (a.phi_minus[static_cast<std::size_t>(u)] - a.phi_plus[static_cast<std::size_t>(u)]);
    if (balance != 0) throw invariant_violation("phi in/out weight balance broken");

    a.min_score_vertex = -1;
    for (int u : a.H) {
        if (a.min_score_vertex < 0 || a.score2[static_cast<std::size_t>(u)] < a.min_score2) {
            a.min_score2 = a.score2[static_cast<std::size_t>(u)];
            a.min_score_vertex = u;
        }
    }
    if (a.min_score2 > n - 2 * a.Z.count())
        throw invariant_violation("minimum doubled score exceeds |G| - 2|Z|");
    return a;
}

namespace {

// Case of a minimum-score vertex inside Z: take Z, the unassigned part of
// S, and one in-neighbour for each not-yet-1-covered non-pure-up
// T-vertex.
VertexSet kernel_from_stable_choice(const Digraph& g, const SplitAnalysis& a, int v) {
    const auto& split = a.split;
    VertexSet J = (split.S - a.Z) & reach2(g, v);
    VertexSet A = split.S - J - a.Q - a.Z;

    VertexSet K = A | a.Z;
    VertexSet one_covered = out_neighbours(g, K);
    for (int t : split.T) {
        if ((g.in(t) & split.S).empty()) continue; // pure-up
        if (one_covered.test(t)) continue;
        int s = (g.in(t) & split.S).first();
        K.set(s);
        one_covered |= g.out(s);
    }
    return K;
}

// Case of a minimum-score vertex in T\B: keep v plus the S-vertices the
// analysis leaves uncovered, then patch with one coverer per remaining
// target from the S-vertices nonadjacent with v.
VertexSet kernel_from_tournament_choice(const Digraph& g, const SplitAnalysis& a, int v) {
    const auto& split = a.split;
    int n = g.order();
    VertexSet D = g.in(v) & split.S;
    VertexSet F = (split.T - a.B) & g.in(v);
    VertexSet q_far(n), q_near(n); // phi classes of Z outside / inside N-(v)
    for (int z : a.Z)
        ((g.in(v).test(z)) ? q_near : q_far) |= a.phi[static_cast<std::size_t>(z)];
    VertexSet J = (split.S - a.Q) & reach2_avoiding(g, v, a.B);
    VertexSet v_covers = reach2(g, v);
    VertexSet s_free = (split.S - g.out(v)) - g.in(v);

    VertexSet X(n);
    for (int u : F) {
        if (v_covers.test(u)) continue;
        VertexSet from = g.in(u) & s_free;
        if (from.empty())
            throw invariant_violation("no private in-neighbour for tournament vertex " + std::to_string(u));
        X.set(from.first());
    }

    VertexSet Y(n);
    VertexSet y_targets = D - J - q_far;
    std::vector<VertexSet> free_cov;
    std::vector<int> free_ids;
    for (int u : y_targets) {
        if (v_covers.test(u)) continue; // v reaches u through B; u stays covered by v
        if (free_ids.empty()) {
            for (int s : s_free) {
                free_ids.push_back(s);
                free_cov.push_back(reach2(g, s));
            }
        }
        int pick = -1;
        for (std::size_t i = 0; i < free_ids.size(); ++i)
            if (free_cov[i].test(u)) { pick = free_ids[i]; break; }
        if (pick < 0)
            throw invariant_violation("no nonadjacent 2-coverer for S-vertex " + std::to_string(u));
        Y.set(pick);
    }

    // The stable part of Z is Z minus all neighbours of v; Z-problems
    // adjacent from v are reached through their problem vertex instead.
    VertexSet K = VertexSet::single(n, v);
    K |= (a.Z - g.in(v)) - g.out(v);
    K |= split.S - a.Q - J - a.Z - D;
    K |= X;
    K |= Y;
    K |= q_near - D;
    return K;
}

// Exact-boundary endgame with S = Z: either Z already works, or a
// maximum-out-degree pure-up vertex patches it.
VertexSet endgame_kernel(const Digraph& g, const SplitAnalysis& a) {
    const auto& split = a.split;
    int n = g.order();
    if (split.S != a.Z || a.Q.any())
        throw invariant_violation("endgame entered with S != Z");
    if (reach_within(g, a.Z, 2).contains_all(split.T)) return a.Z;

    VertexSet pure(n);
    for (int t : split.T)
        if ((g.in(t) & split.S).empty()) pure.set(t);
    if (pure.empty()) throw invariant_violation("endgame needs a pure-up vertex");
    int p = -1, best = -1;
    for (int t : pure) {
        int d = (g.out(t) & pure).count();
        if (d > best) { best = d; p = t; }
    }
    VertexSet K = a.Z - g.out(p);
    K.set(p);
    if (2 * K.count() <= n) return K;
    return VertexSet::single(n, p);
}

} // namespace

KernelCertificate small_quasi_kernel(const Digraph& g, const SplitPartition& split) {
    SplitAnalysis a = split_analysis(g, split);
    int n = g.order();
    long long boundary = n - 2 * a.Z.count();

    VertexSet K(n);
    if (a.min_score2 == boundary) {
        int zpick = -1, tpick = -1;
        for (int z : a.Z)
            if (a.phi[static_cast<std::size_t>(z)].any()) { zpick = z; break; }
        if (zpick < 0)
            for (int t : split.T - a.B)
                if (a.phi[static_cast<std::size_t>(t)].count() >= 2) { tpick = t; break; }
        if (zpick >= 0)
            K = kernel_from_stable_choice(g, a, zpick);
        else if (tpick >= 0)
            K = kernel_from_tournament_choice(g, a, tpick);
        else
            K = endgame_kernel(g, a);
    } else {
        int v = a.min_score_vertex;
        K = a.Z.test(v) ? kernel_from_stable_choice(g, a, v) : kernel_from_tournament_choice(g, a, v);
    }

    auto check = verify_kernel(g, K, 2, Rational(n, 2));
    if (!check.ok())
        throw invariant_violation("split quasi-kernel failed verification: " + check.failure->message());
    return *check.cert;
}

int tournament_king(const Digraph& g) {
    int best = -1, best_deg = -1;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.out_degree(v);
        if (d > best_deg) { best_deg = d; best = v; }
    }
    return best;
}

KernelCertificate small_quasi_kernel_general(const Digraph& g, const SplitPartition& split) {
    if (g.sources().any())
        throw validation_error(validation_error::kind::has_source,
                               "source-free digraph required; vertex " +
                               std::to_string(g.sources().first()) + " is a source");
    if (split.S.any()) return small_quasi_kernel(g, split);
    int king = tournament_king(g);
    auto check = verify_kernel(g, VertexSet::single(g.order(), king), 2, Rational(g.order(), 2));
    if (!check.ok())
        throw invariant_violation("tournament king failed verification: " + check.failure->message());
    return *check.cert;
}

} // namespace dgk
