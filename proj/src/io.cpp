#include "dgk/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <vector>

namespace dgk {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    [[noreturn]] void fail(const std::string& what) const {
        throw validation_error(validation_error::kind::syntax,
                               "line " + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
    }
};

struct Token {
    std::string_view text;
    int line, col;
};

// Splits into whitespace-separated tokens, one vector per line, comments
// stripped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::vector<Token> current;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto flush_line = [&]() {
        if (!current.empty()) lines.push_back(std::move(current));
        current.clear();
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            flush_line();
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r') {
            ++i;
            ++col;
            continue;
        }
        std::size_t start = i;
        int tcol = col;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\r' &&
               text[i] != '\n' && text[i] != '#') {
            ++i;
            ++col;
        }
        current.push_back({text.substr(start, i - start), line, tcol});
    }
    flush_line();
    return lines;
}

long long parse_int(const Token& t, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size())
        throw validation_error(validation_error::kind::syntax,
                               "line " + std::to_string(t.line) + ":" + std::to_string(t.col) +
                                   ": expected " + what + ", got '" + std::string(t.text) + "'");
    return value;
}

[[noreturn]] void fail_at(const Token& t, const std::string& what) {
    throw validation_error(validation_error::kind::syntax,
                           "line " + std::to_string(t.line) + ":" + std::to_string(t.col) + ": " + what);
}

} // namespace

ParsedInstance parse_instance(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty())
        throw validation_error(validation_error::kind::syntax, "line 1:1: missing 'digraph <n> <m>' header");
    const auto& head = lines.front();
    if (head[0].text != "digraph" || head.size() != 3)
        fail_at(head[0], "expected 'digraph <n> <m>' header");
    long long n = parse_int(head[1], "vertex count");
    long long m = parse_int(head[2], "edge count");
    if (n < 0 || n > 1'000'000) fail_at(head[1], "vertex count out of range");
    if (m < 0) fail_at(head[2], "edge count out of range");

    std::vector<Edge> edges;
    std::optional<std::vector<int>> s_ids;
    std::vector<std::pair<int, long long>> weights;
    std::vector<char> has_weight(static_cast<std::size_t>(n), 0);

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& ln = lines[li];
        const auto& kw = ln[0];
        if (kw.text == "e") {
            if (ln.size() != 3) fail_at(kw, "expected 'e <u> <v>'");
            long long u = parse_int(ln[1], "vertex id");
            long long v = parse_int(ln[2], "vertex id");
            if (u < 0 || u >= n) fail_at(ln[1], "vertex id out of range");
            if (v < 0 || v >= n) fail_at(ln[2], "vertex id out of range");
            if (u == v) fail_at(ln[1], "loop edge");
            edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        } else if (kw.text == "S") {
            if (s_ids) fail_at(kw, "duplicate S line");
            s_ids.emplace();
            for (std::size_t i = 1; i < ln.size(); ++i) {
                long long v = parse_int(ln[i], "vertex id");
                if (v < 0 || v >= n) fail_at(ln[i], "vertex id out of range");
                s_ids->push_back(static_cast<int>(v));
            }
        } else if (kw.text == "w") {
            if (ln.size() != 3) fail_at(kw, "expected 'w <v> <weight>'");
            long long v = parse_int(ln[1], "vertex id");
            long long weight = parse_int(ln[2], "weight");
            if (v < 0 || v >= n) fail_at(ln[1], "vertex id out of range");
            if (weight < 0) fail_at(ln[2], "weights must be nonnegative");
            if (has_weight[static_cast<std::size_t>(v)]) fail_at(ln[1], "duplicate weight for vertex");
            has_weight[static_cast<std::size_t>(v)] = 1;
            weights.push_back({static_cast<int>(v), weight});
        } else {
            fail_at(kw, "unknown directive '" + std::string(kw.text) + "'");
        }
    }
    if (static_cast<long long>(edges.size()) != m)
        throw validation_error(validation_error::kind::syntax,
                               "header announces " + std::to_string(m) + " edges, found " +
                                   std::to_string(edges.size()));

    ParsedInstance inst;
    try {
        inst.g = Digraph(static_cast<int>(n), edges);
    } catch (const validation_error& e) {
        throw validation_error(e.which, std::string("instance edges: ") + e.what());
    }
    if (s_ids) {
        VertexSet S(static_cast<int>(n));
        for (int v : *s_ids) S.set(v);
        inst.S = S;
    }
    if (!weights.empty()) {
        WeightMap f = WeightMap::uniform(static_cast<int>(n), 0);
        for (auto [v, weight] : weights) f.w[static_cast<std::size_t>(v)] = weight;
        inst.weights = std::move(f);
    }
    return inst;
}

std::string emit_instance(const Digraph& g, const VertexSet* S, const WeightMap* weights) {
    std::ostringstream out;
    out << "digraph " << g.order() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    if (S) {
        out << "S";
        for (int v : *S) out << " " << v;
        out << "\n";
    }
    if (weights)
        for (int v = 0; v < g.order(); ++v)
            if (weights->w[static_cast<std::size_t>(v)] != 0)
                out << "w " << v << " " << weights->w[static_cast<std::size_t>(v)] << "\n";
    return out.str();
}

std::string emit_dot(const Digraph& g, const VertexSet& highlight) {
    std::ostringstream out;
    out << "digraph G {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (highlight.universe() == g.order() && highlight.test(v)) out << " [class=\"kernel\"]";
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string instance_hash(const ParsedInstance& inst) {
    std::string canon = emit_instance(inst.g, inst.S ? &*inst.S : nullptr,
                                      inst.weights ? &*inst.weights : nullptr);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(canon)));
    return std::string("fnv1a64:") + buf;
}

nlohmann::json certificate_json(const std::string& algorithm, const ParsedInstance& inst,
                                const KernelCertificate& cert, std::optional<long long> coverage) {
    nlohmann::json doc;
    doc["algorithm"] = algorithm;
    doc["input_hash"] = instance_hash(inst);
    doc["kernel"] = cert.kernel.to_vector();
    doc["k"] = cert.k;
    doc["bound"] = cert.claimed_bound.str();
    doc["valid"] = true;
    nlohmann::json wit = nlohmann::json::array();
    for (auto& path : certificate_witnesses(inst.g, cert)) wit.push_back(path);
    doc["witness"] = wit;
    if (coverage) doc["coverage"] = *coverage;
    return doc;
}

std::string dump_json(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

CertificateVerification verify_certificate_json(const nlohmann::json& doc, const ParsedInstance& inst) {
    auto fail = [](std::string why) { return CertificateVerification{false, std::move(why)}; };
    try {
        if (!doc.contains("kernel") || !doc.contains("k") || !doc.contains("bound"))
            return fail("certificate missing kernel/k/bound");
        if (doc.contains("input_hash") && doc["input_hash"].get<std::string>() != instance_hash(inst))
            return fail("input hash mismatch");
        if (doc.contains("valid") && !doc["valid"].get<bool>())
            return fail("certificate marked invalid");
        int k = doc["k"].get<int>();
        if (k < 0) return fail("negative radius");
        VertexSet kernel(inst.g.order());
        for (const auto& v : doc["kernel"]) {
            int id = v.get<int>();
            if (id < 0 || id >= inst.g.order()) return fail("kernel vertex out of range");
            kernel.set(id);
        }
        Rational bound = Rational::parse(doc["bound"].get<std::string>());
        auto check = verify_kernel(inst.g, kernel, k, bound);
        if (!check.ok()) return fail(check.failure->message());
        if (doc.contains("witness")) {
            const auto& wit = doc["witness"];
            if (static_cast<int>(wit.size()) != inst.g.order())
                return fail("witness list sized for a different digraph");
            for (int v = 0; v < inst.g.order(); ++v) {
                const auto& path = wit[static_cast<std::size_t>(v)];
                if (path.empty() || static_cast<int>(path.size()) > k + 1)
                    return fail("witness path for vertex " + std::to_string(v) + " has bad length");
                std::vector<int> ids;
                for (const auto& x : path) ids.push_back(x.get<int>());
                if (!kernel.test(ids.front()))
                    return fail("witness for vertex " + std::to_string(v) + " starts outside the kernel");
                if (ids.back() != v)
                    return fail("witness for vertex " + std::to_string(v) + " ends elsewhere");
                for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
                    if (ids[i] < 0 || ids[i] >= inst.g.order() || ids[i + 1] < 0 ||
                        ids[i + 1] >= inst.g.order() || !inst.g.has_edge(ids[i], ids[i + 1]))
                        return fail("witness for vertex " + std::to_string(v) + " uses a missing edge");
                }
            }
        }
        if (doc.contains("coverage")) {
            if (!inst.weights) return fail("coverage claimed but the instance carries no weights");
            long long cov = inst.weights->sum(closed_out_neighbours(inst.g, kernel));
            if (cov != doc["coverage"].get<long long>()) return fail("coverage value mismatch");
            if (2 * cov < inst.weights->total()) return fail("coverage below half the total weight");
        }
    } catch (const nlohmann::json::exception& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    } catch (const validation_error& e) {
        return fail(std::string("malformed certificate: ") + e.what());
    }
    return {true, ""};
}

} // namespace dgk
