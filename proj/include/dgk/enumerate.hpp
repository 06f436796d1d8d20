#ifndef DGK_ENUMERATE_HPP
#define DGK_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "dgk/canonical.hpp"
#include "dgk/digraph.hpp"

namespace dgk {

enum class Family {
    all_digraphs,          // every digraph, digons included
    no_source_oriented,    // oriented, no source
    split,                 // oriented with a split (S nonempty, no S-source), partition attached
    brk,                   // oriented with a break, partition attached
    single_source_acyclic, // acyclic, exactly one source
    acyclic,               // acyclic (topologically labelled sweep)
};

std::optional<Family> family_from_name(const std::string& name);
std::string family_name(Family f);

struct EnumerationSpec {
    Family family = Family::all_digraphs;
    int n = 1;
    bool dedup = true;
    int ceiling = 8;
};

// Core stream over compact instances; smask is the S side when
// has_partition. Deterministic order; start_index skips a prefix. The
// callback returns false to stop.
using SmallInstanceFn = std::function<bool(std::uint64_t index, const SmallDigraph& g,
                                           std::uint8_t smask, bool has_partition)>;
void enumerate_small(const EnumerationSpec& spec, std::uint64_t start_index, const SmallInstanceFn& fn);

struct EnumInstance {
    std::uint64_t index;
    const Digraph& g;
    const VertexSet* S; // null when the family carries no partition
};

void enumerate_instances(const EnumerationSpec& spec, std::uint64_t start_index,
                         const std::function<bool(const EnumInstance&)>& fn);

std::uint64_t enumerate_count(const EnumerationSpec& spec);

} // namespace dgk

#endif
