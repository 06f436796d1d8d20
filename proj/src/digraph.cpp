#include "dgk/digraph.hpp"

#include <string>

namespace dgk {

Digraph::Digraph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw validation_error(validation_error::kind::id_out_of_range, "negative vertex count");
    out_.assign(n_, VertexSet(n_));
    in_.assign(n_, VertexSet(n_));
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw validation_error(validation_error::kind::id_out_of_range,
                                   "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                       ") out of range for n=" + std::to_string(n_));
        if (u == v)
            throw validation_error(validation_error::kind::loop_edge,
                                   "loop edge at vertex " + std::to_string(u));
        if (out_[u].test(v))
            throw validation_error(validation_error::kind::duplicate_edge,
                                   "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        out_[u].set(v);
        in_[v].set(u);
        ++m_;
    }
}

bool Digraph::is_oriented() const {
    for (int v = 0; v < n_; ++v)
        if (out_[v].intersects(in_[v])) return false;
    return true;
}

std::vector<Edge> Digraph::digons() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        VertexSet both = out_[u] & in_[u];
        for (int v : both)
            if (v > u) out.push_back({u, v});
    }
    return out;
}

VertexSet Digraph::sources() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v)
        if (in_[v].empty()) s.set(v);
    return s;
}

VertexSet Digraph::sinks() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v)
        if (out_[v].empty()) s.set(v);
    return s;
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) es.push_back({u, v});
    return es;
}

Digraph Digraph::from_out_rows(std::vector<VertexSet> out_rows) {
    Digraph g;
    g.n_ = static_cast<int>(out_rows.size());
    g.out_ = std::move(out_rows);
    g.in_.assign(g.n_, VertexSet(g.n_));
    int m = 0;
    for (int u = 0; u < g.n_; ++u) {
        m += g.out_[u].count();
        for (int v : g.out_[u]) g.in_[v].set(u);
    }
    g.m_ = m;
    return g;
}

Digraph build_digraph(int n, std::span<const Edge> edges) { return Digraph(n, edges); }

} // namespace dgk
