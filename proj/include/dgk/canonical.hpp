#ifndef DGK_CANONICAL_HPP
#define DGK_CANONICAL_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "dgk/digraph.hpp"

namespace dgk {

// Compact digraph on at most 8 vertices for enumeration inner loops.
struct SmallDigraph {
    int n = 0;
    std::array<std::uint8_t, 8> row{}; // bit w of row[v]: edge v->w

    bool edge(int u, int v) const { return (row[static_cast<std::size_t>(u)] >> v) & 1; }
    void add(int u, int v) { row[static_cast<std::size_t>(u)] |= std::uint8_t(1u << v); }
    // 2-bit pair state: bit0 = u->v, bit1 = v->u.
    int state(int u, int v) const { return (edge(u, v) ? 1 : 0) | (edge(v, u) ? 2 : 0); }

    Digraph to_digraph() const;
    bool has_source() const;
    bool operator==(const SmallDigraph&) const = default;
};

// Upper-triangular pair states packed as a 64-bit canonical code: column
// order (j = 1..n-1, i < j), 2 bits per pair. Total order on codes =
// integer order.
using PackedCode = std::uint64_t;

// Minimum code over all vertex permutations; with `colour` given, only
// colour-preserving permutations compete and positions are grouped by
// ascending colour. `forced_last >= 0` restricts to permutations placing
// that vertex last.
PackedCode canonical_code(const SmallDigraph& g, const int* colour = nullptr, int forced_last = -1);

// All permutations mapping g onto itself (colour-preserving when given).
std::vector<std::array<int, 8>> automorphisms(const SmallDigraph& g, const int* colour = nullptr);

// Rebuilds the canonical representative itself (graph relabelled by a
// minimum-achieving permutation).
SmallDigraph canonical_image(const SmallDigraph& g, const int* colour = nullptr);

// Non-isomorphic representatives with every pair in one of `states`
// configurations (3 = oriented, 4 = digons allowed), grown one vertex at
// a time with canonical-deletion filtering. Deterministic order.
std::vector<SmallDigraph> digraph_representatives(int n, int states);

// Canonical tournament representatives, sorted by code, with their
// automorphism groups.
struct RepWithAuts {
    SmallDigraph g;
    std::vector<std::array<int, 8>> auts;
};
std::vector<RepWithAuts> tournament_representatives(int n);

// Canonical acyclic representatives (from topologically labelled sweeps),
// sorted by code, with automorphism groups.
std::vector<RepWithAuts> acyclic_representatives(int n);

} // namespace dgk

#endif
