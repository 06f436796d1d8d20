#ifndef DGK_IO_HPP
#define DGK_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dgk/break_kernel.hpp"
#include "dgk/cover.hpp"
#include "dgk/digraph.hpp"

#include <json.hpp>

namespace dgk {

struct ParsedInstance {
    Digraph g;
    std::optional<VertexSet> S;       // partition's S side, T = complement
    std::optional<WeightMap> weights; // engaged when any `w` line appears
};

// Grammar: `digraph <n> <m>` header, m `e <u> <v>` lines, optional
// `S <id...>` line, optional `w <v> <weight>` lines; `#` starts a
// comment. Errors carry line:column positions.
ParsedInstance parse_instance(std::string_view text);

// Canonical serialization: header, edges sorted, S sorted, nonzero
// weights sorted. parse(emit(x)) reproduces x's digraph exactly.
std::string emit_instance(const Digraph& g, const VertexSet* S = nullptr,
                          const WeightMap* weights = nullptr);

// Deterministic DOT text; highlighted vertices carry a `kernel` class.
std::string emit_dot(const Digraph& g, const VertexSet& highlight);

std::uint64_t fnv1a64(std::string_view data);

// Hash of the canonical serialization, as "fnv1a64:<16 hex digits>".
std::string instance_hash(const ParsedInstance& inst);

// Canonical certificate document: sorted keys and sorted sets, so byte
// equality coincides with semantic equality.
nlohmann::json certificate_json(const std::string& algorithm, const ParsedInstance& inst,
                                const KernelCertificate& cert,
                                std::optional<long long> coverage = std::nullopt);

std::string dump_json(const nlohmann::json& doc);

struct CertificateVerification {
    bool ok = false;
    std::string reason;
};

// Re-verifies a certificate document against its instance: hash, kernel,
// radius, bound, witness paths, and weighted coverage when present.
CertificateVerification verify_certificate_json(const nlohmann::json& doc, const ParsedInstance& inst);

} // namespace dgk

#endif
