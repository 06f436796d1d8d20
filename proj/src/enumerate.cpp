#include "dgk/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "dgk/errors.hpp"

namespace dgk {

std::optional<Family> family_from_name(const std::string& name) {
    if (name == "all-oriented" || name == "all") return Family::all_digraphs;
    if (name == "no-source-oriented") return Family::no_source_oriented;
    if (name == "split") return Family::split;
    if (name == "break") return Family::brk;
    if (name == "single-source-acyclic") return Family::single_source_acyclic;
    if (name == "acyclic") return Family::acyclic;
    return std::nullopt;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::all_digraphs: return "all-oriented";
        case Family::no_source_oriented: return "no-source-oriented";
        case Family::split: return "split";
        case Family::brk: return "break";
        case Family::single_source_acyclic: return "single-source-acyclic";
        case Family::acyclic: return "acyclic";
    }
    return "?";
}

namespace {

struct Emitter {
    const SmallInstanceFn& fn;
    std::uint64_t start;
    std::uint64_t index = 0;
    bool stopped = false;

    bool emit(const SmallDigraph& g, std::uint8_t smask, bool has_partition) {
        std::uint64_t i = index++;
        if (i < start) return true;
        if (!fn(i, g, smask, has_partition)) {
            stopped = true;
            return false;
        }
        return true;
    }
};

void stream_representatives(int n, int states, bool want_no_source, Emitter& em) {
    auto reps = digraph_representatives(n, states);
    for (const auto& g : reps) {
        if (want_no_source && g.has_source()) continue;
        if (!em.emit(g, 0, false)) return;
    }
}

void stream_labelled(int n, int states, bool want_no_source, Emitter& em) {
    if (n > 5) throw size_guard_error("labelled (dedup off) streams capped at 5 vertices");
    int pairs = n * (n - 1) / 2;
    std::uint64_t total = 1;
    for (int i = 0; i < pairs; ++i) total *= static_cast<std::uint64_t>(states);
    for (std::uint64_t id = 0; id < total; ++id) {
        SmallDigraph g;
        g.n = n;
        std::uint64_t x = id;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                int st = static_cast<int>(x % states);
                x /= static_cast<std::uint64_t>(states);
                if (st & 1) g.add(i, j);
                if (st & 2) g.add(j, i);
            }
        if (want_no_source && g.has_source()) continue;
        if (!em.emit(g, 0, false)) return;
    }
}

void stream_acyclic(int n, bool dedup, bool single_source, Emitter& em) {
    if (dedup && n > 7) throw size_guard_error("deduplicated acyclic stream capped at 7 vertices");
    int pairs = n * (n - 1) / 2;
    std::unordered_set<PackedCode> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        SmallDigraph g;
        g.n = n;
        int bit = 0;
        bool ok = true;
        for (int j = 1; j < n; ++j) {
            bool has_in = false;
            for (int i = 0; i < j; ++i, ++bit)
                if ((mask >> bit) & 1u) {
                    g.add(i, j);
                    has_in = true;
                }
            if (single_source && !has_in) ok = false;
        }
        if (!ok) continue;
        if (dedup && !seen.insert(canonical_code(g)).second) continue;
        if (!em.emit(g, 0, false)) return;
    }
}

int pattern_trit(std::uint32_t pattern, int j) { // relation of an S-vertex to T-vertex j
    std::uint32_t p = pattern;
    for (int i = 0; i < j; ++i) p /= 3;
    return static_cast<int>(p % 3);
}

std::uint32_t permute_pattern(std::uint32_t pattern, const std::array<int, 8>& sigma, int b) {
    int out[8] = {};
    for (int j = 0; j < b; ++j) out[sigma[static_cast<std::size_t>(j)]] = pattern_trit(pattern, j);
    std::uint32_t q = 0;
    for (int j = b - 1; j >= 0; --j) q = q * 3 + static_cast<std::uint32_t>(out[j]);
    return q;
}

SmallDigraph assemble_split(const SmallDigraph& trep, int b, int a, const std::uint32_t* tuple) {
    SmallDigraph g = trep;
    g.n = a + b;
    for (int i = 0; i < a; ++i) {
        int s = b + i;
        for (int j = 0; j < b; ++j) {
            int st = pattern_trit(tuple[i], j);
            if (st == 1) g.add(s, j);
            if (st == 2) g.add(j, s);
        }
    }
    return g;
}

// Multisets of S-patterns over a tournament representative, minimal under
// the tournament's automorphisms.
void stream_split(int n, Emitter& em) {
    for (int a = 1; a < n; ++a) {
        int b = n - a;
        std::uint32_t npat = 1;
        for (int j = 0; j < b; ++j) npat *= 3;
        // A pattern is usable when some T-vertex points at the S-vertex.
        std::vector<std::uint32_t> usable;
        for (std::uint32_t p = 0; p < npat; ++p) {
            bool has_in = false;
            for (int j = 0; j < b && !has_in; ++j) has_in = pattern_trit(p, j) == 2;
            if (has_in) usable.push_back(p);
        }
        auto treps = tournament_representatives(b);
        std::uint8_t smask = static_cast<std::uint8_t>(((1u << n) - 1u) & ~((1u << b) - 1u));
        for (const auto& rep : treps) {
            bool trivial_aut = rep.auts.size() <= 1;
            // Nondecreasing index tuples over the usable patterns.
            std::vector<int> idx(static_cast<std::size_t>(a), 0);
            std::vector<std::uint32_t> tuple(static_cast<std::size_t>(a), 0);
            while (true) {
                for (int i = 0; i < a; ++i)
                    tuple[static_cast<std::size_t>(i)] = usable[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
                bool minimal = true;
                if (!trivial_aut) {
                    std::vector<std::uint32_t> moved(static_cast<std::size_t>(a));
                    for (std::size_t ai = 1; ai < rep.auts.size() && minimal; ++ai) {
                        for (int i = 0; i < a; ++i)
                            moved[static_cast<std::size_t>(i)] =
                                permute_pattern(tuple[static_cast<std::size_t>(i)], rep.auts[ai], b);
                        std::sort(moved.begin(), moved.end());
                        minimal = !std::lexicographical_compare(moved.begin(), moved.end(),
                                                                tuple.begin(), tuple.end());
                    }
                }
                if (minimal) {
                    SmallDigraph g = assemble_split(rep.g, b, a, tuple.data());
                    if (!em.emit(g, smask, true)) return;
                }
                int pos = a - 1;
                while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 ==
                                       static_cast<int>(usable.size()))
                    --pos;
                if (pos < 0) break;
                int v = ++idx[static_cast<std::size_t>(pos)];
                for (int i = pos + 1; i < a; ++i) idx[static_cast<std::size_t>(i)] = v;
            }
        }
    }
}

// Acyclic part times tournament part times oriented connection matrix,
// minimal under the product of the two automorphism groups.
void stream_break(int n, Emitter& em) {
    for (int a = 0; a <= n; ++a) {
        int b = n - a;
        auto sreps = acyclic_representatives(a);
        auto treps = tournament_representatives(b);
        std::uint8_t smask = static_cast<std::uint8_t>(((1u << n) - 1u) & ~((1u << b) - 1u));
        int cells = a * b;
        for (const auto& srep : sreps) {
            for (const auto& trep : treps) {
                bool trivial = srep.auts.size() <= 1 && trep.auts.size() <= 1;
                std::vector<int> trits(static_cast<std::size_t>(cells), 0);
                while (true) {
                    bool minimal = true;
                    if (!trivial) {
                        for (std::size_t si = 0; si < srep.auts.size() && minimal; ++si) {
                            for (std::size_t ti = 0; ti < trep.auts.size() && minimal; ++ti) {
                                if (si == 0 && ti == 0) continue;
                                const auto& ss = srep.auts[si];
                                const auto& tt = trep.auts[ti];
                                // moved(ss(i), tt(j)) = trits(i, j); compare row-major.
                                int cmp = 0;
                                for (int cell = 0; cell < cells && cmp == 0; ++cell) {
                                    int i = cell / (b == 0 ? 1 : b), j = b == 0 ? 0 : cell % b;
                                    int pre_i = -1, pre_j = -1;
                                    // inverse images
                                    for (int x = 0; x < a; ++x)
                                        if (ss[static_cast<std::size_t>(x)] == i) { pre_i = x; break; }
                                    for (int x = 0; x < b; ++x)
                                        if (tt[static_cast<std::size_t>(x)] == j) { pre_j = x; break; }
                                    int moved = trits[static_cast<std::size_t>(pre_i * b + pre_j)];
                                    int orig = trits[static_cast<std::size_t>(cell)];
                                    cmp = moved - orig;
                                }
                                if (cmp < 0) minimal = false;
                            }
                        }
                    }
                    if (minimal) {
                        SmallDigraph g = trep.g;
                        g.n = n;
                        for (int i = 0; i < a; ++i)
                            for (int j = 0; j < a; ++j)
                                if (srep.g.edge(i, j)) g.add(b + i, b + j);
                        for (int cell = 0; cell < cells; ++cell) {
                            int i = cell / b, j = cell % b;
                            int st = trits[static_cast<std::size_t>(cell)];
                            if (st == 1) g.add(b + i, j);
                            if (st == 2) g.add(j, b + i);
                        }
                        if (!em.emit(g, smask, true)) return;
                    }
                    int pos = cells - 1;
                    while (pos >= 0 && trits[static_cast<std::size_t>(pos)] == 2) {
                        trits[static_cast<std::size_t>(pos)] = 0;
                        --pos;
                    }
                    if (pos < 0) break;
                    ++trits[static_cast<std::size_t>(pos)];
                }
            }
        }
    }
}

} // namespace

void enumerate_small(const EnumerationSpec& spec, std::uint64_t start_index, const SmallInstanceFn& fn) {
    if (spec.n < 1) throw validation_error(validation_error::kind::bad_precondition, "need n >= 1");
    if (spec.n > spec.ceiling || spec.n > 8)
        throw size_guard_error("enumeration of " + std::to_string(spec.n) +
                               "-vertex instances exceeds the ceiling of " +
                               std::to_string(std::min(spec.ceiling, 8)));
    Emitter em{fn, start_index};
    switch (spec.family) {
        case Family::all_digraphs:
            spec.dedup ? stream_representatives(spec.n, 4, false, em)
                       : stream_labelled(spec.n, 4, false, em);
            break;
        case Family::no_source_oriented:
            spec.dedup ? stream_representatives(spec.n, 3, true, em)
                       : stream_labelled(spec.n, 3, true, em);
            break;
        case Family::split:
            stream_split(spec.n, em); // generated canonically; dedup flag moot
            break;
        case Family::brk:
            stream_break(spec.n, em);
            break;
        case Family::single_source_acyclic:
            stream_acyclic(spec.n, spec.dedup, true, em);
            break;
        case Family::acyclic:
            stream_acyclic(spec.n, spec.dedup, false, em);
            break;
    }
}

void enumerate_instances(const EnumerationSpec& spec, std::uint64_t start_index,
                         const std::function<bool(const EnumInstance&)>& fn) {
    enumerate_small(spec, start_index,
                    [&](std::uint64_t index, const SmallDigraph& sg, std::uint8_t smask, bool has_s) {
                        Digraph g = sg.to_digraph();
                        if (has_s) {
                            VertexSet S(sg.n);
                            for (int v = 0; v < sg.n; ++v)
                                if ((smask >> v) & 1u) S.set(v);
                            return fn(EnumInstance{index, g, &S});
                        }
                        return fn(EnumInstance{index, g, nullptr});
                    });
}

std::uint64_t enumerate_count(const EnumerationSpec& spec) {
    std::uint64_t count = 0;
    enumerate_small(spec, 0, [&](std::uint64_t, const SmallDigraph&, std::uint8_t, bool) {
        ++count;
        return true;
    });
    return count;
}

} // namespace dgk
