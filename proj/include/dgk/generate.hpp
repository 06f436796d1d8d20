#ifndef DGK_GENERATE_HPP
#define DGK_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "dgk/digraph.hpp"

namespace dgk {

enum class GenKind {
    tournament,
    split,
    brk,
    arborescence_plus_edges,
    strongly_connected,
    single_source_acyclic,
};

std::optional<GenKind> gen_kind_from_name(const std::string& name);
std::string gen_kind_name(GenKind k);

// Identical spec, identical output: all randomness flows through one
// mt19937_64 and engine-level draws only (no distribution objects).
struct GeneratorSpec {
    GenKind kind = GenKind::tournament;
    int n = 0;          // tournament / arborescence / strongly-connected / acyclic
    int n_s = 0;        // split / break
    int n_t = 0;
    double density = 0.5;
    int extra = 0;      // extra edges for the arborescence / acyclic kinds
    std::uint64_t seed = 0;
};

struct GeneratedInstance {
    Digraph g;
    std::optional<VertexSet> S; // split / break kinds: tournament first, S after
};

GeneratedInstance generate(const GeneratorSpec& spec);

} // namespace dgk

#endif
