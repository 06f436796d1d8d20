#ifndef DGK_DIGRAPH_HPP
#define DGK_DIGRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "dgk/errors.hpp"
#include "dgk/vertex_set.hpp"

namespace dgk {

using Edge = std::pair<int, int>;

// Loop-free simple directed graph over dense ids 0..n-1. Both adjacency
// directions are stored; in(v) is always the exact transpose of out(v).
// Immutable after construction; derived graphs are built fresh.
class Digraph {
  public:
    Digraph() = default;

    Digraph(int n, std::span<const Edge> edges);
    Digraph(int n, std::initializer_list<Edge> edges)
        : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const { return n_; }
    int edge_count() const { return m_; }

    const VertexSet& out(int v) const { return out_[v]; }
    const VertexSet& in(int v) const { return in_[v]; }
    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const { return in_[v].count(); }

    bool has_edge(int u, int v) const { return out_[u].test(v); }
    bool adjacent(int u, int v) const { return out_[u].test(v) || out_[v].test(u); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    // No digon (directed 2-cycle) anywhere.
    bool is_oriented() const;
    // First digon in (min,max) lexicographic order, or nullopt.
    std::vector<Edge> digons() const;

    VertexSet sources() const;
    VertexSet sinks() const;

    std::vector<Edge> edges() const;

    // Internal fast path: adopt prebuilt adjacency rows (transpose is
    // derived). Rows must already be loop-free.
    static Digraph from_out_rows(std::vector<VertexSet> out_rows);

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.out_ == b.out_;
    }

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

// Validating constructor entry point named as the operation.
Digraph build_digraph(int n, std::span<const Edge> edges);
inline Digraph build_digraph(int n, std::initializer_list<Edge> edges) {
    return build_digraph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

} // namespace dgk

#endif
