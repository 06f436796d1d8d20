#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dgk/acyclic_kernels.hpp"
#include "dgk/break_kernel.hpp"
#include "dgk/generate.hpp"
#include "dgk/io.hpp"
#include "dgk/oracle.hpp"
#include "dgk/split_qk.hpp"
#include "dgk/structure.hpp"
#include "dgk/sweeps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitCounterexample = 4;
constexpr int kExitInvariant = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw dgk::validation_error(dgk::validation_error::kind::syntax, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int env_size_guard(int fallback) {
    if (const char* v = std::getenv("DGK_SIZE_GUARD")) {
        int g = std::atoi(v);
        if (g > 0) return g;
    }
    return fallback;
}

void print_result(const nlohmann::json& doc) { std::cout << dgk::dump_json(doc); }

int run_split_qk(const std::string& path, bool allow_digons) {
    using namespace dgk;
    ParsedInstance inst = parse_instance(read_file(path));
    if (!inst.S) {
        std::cerr << "error: the instance declares no partition (S line required)\n";
        return kExitInvalidInput;
    }
    Digraph g = inst.g;
    VertexSet S = *inst.S;
    std::optional<DigonReduction> red;
    if (!g.is_oriented()) {
        if (!allow_digons) {
            std::cerr << "error: instance has digons; rerun with --allow-digons\n";
            return kExitInvalidInput;
        }
        red = reduce_digons(g); // requires a source-free digraph
        VertexSet rs(red->reduced.order());
        for (int i = 0; i < red->reduced.order(); ++i)
            if (S.test(red->survivor_ids[static_cast<std::size_t>(i)])) rs.set(i);
        g = red->reduced;
        S = rs;
        std::cerr << "note: removed " << red->removed_edges.size() << " digon edges, deleted "
                  << (inst.g.order() - g.order()) << " vertices\n";
    }

    VertexSet kernel(inst.g.order());
    if (g.order() > 0) {
        PartitionClass cls = classify_partition(g, S, g.vertices() - S);
        if (!cls.is_split()) {
            std::cerr << "error: not a split digraph: " << cls.reason << "\n";
            return kExitInvalidInput;
        }
        SplitPartition split{S, g.vertices() - S};
        KernelCertificate cert = S.any() ? small_quasi_kernel(g, split)
                                         : small_quasi_kernel_general(g, split);
        if (red)
            kernel = extend_kernel(*red, cert.kernel, inst.g.order());
        else
            kernel = cert.kernel;
    } else if (red) {
        kernel = extend_kernel(*red, VertexSet(0), inst.g.order());
    }

    Rational bound = red ? Rational(g.order() + 2 * static_cast<long long>(red->deletions.size()), 2)
                         : Rational(inst.g.order(), 2);
    auto check = verify_kernel(inst.g, kernel, 2, bound);
    if (!check.ok()) throw invariant_violation("final kernel rejected: " + check.failure->message());
    print_result(certificate_json("split-quasi-kernel", inst, *check.cert));
    return kExitOk;
}

int run_large2k(const std::string& path, long long uniform_weight, const std::string& nplus_mode,
                int guard) {
    using namespace dgk;
    ParsedInstance inst = parse_instance(read_file(path));
    if (!inst.S) {
        std::cerr << "error: the instance declares no partition (S line required)\n";
        return kExitInvalidInput;
    }
    WeightMap f;
    if (inst.weights)
        f = *inst.weights;
    else if (uniform_weight >= 0)
        f = WeightMap::uniform(inst.g.order(), uniform_weight);
    else {
        std::cerr << "error: no weights in the instance; pass --uniform-weight\n";
        return kExitInvalidInput;
    }
    BreakPartition brk = require_valid_break(inst.g, *inst.S);
    SpecialKernel sk = large_two_kernel(inst.g, brk, f);
    ParsedInstance canon = inst;
    canon.weights = f;
    KernelCertificate cert{sk.kernel, 2, Rational(inst.g.order() == 0 ? 1 : inst.g.order())};
    long long coverage = sk.coverage;
    nlohmann::json doc;
    if (nplus_mode == "open") {
        coverage = f.sum(out_neighbours(inst.g, sk.kernel));
        doc = certificate_json("break-large-two-kernel", canon, cert, coverage);
        doc["coverage_mode"] = "open";
    } else {
        doc = certificate_json("break-large-two-kernel", canon, cert, coverage);
    }
    doc["shape"] = sk.anchored ? "anchored" : "subset-of-S";
    if (sk.anchored) doc["anchor"] = sk.anchor;
    if (!nplus_mode.empty()) {
        MixedVerdict mv = check_mixed_conjecture(inst.g, f,
                                                 nplus_mode == "closed" ? NPlusMode::closed
                                                                        : NPlusMode::open,
                                                 guard);
        doc["mixed_conjecture"] = nlohmann::json{{"mode", nplus_mode},
                                                 {"holds", mv.holds},
                                                 {"witness", mv.witness.to_vector()}};
    }
    print_result(doc);
    return kExitOk;
}

int run_kkernel(const std::string& path, int k) {
    using namespace dgk;
    ParsedInstance inst = parse_instance(read_file(path));
    const Digraph& g = inst.g;
    if (g.order() == 0) {
        std::cerr << "error: empty digraph\n";
        return kExitInvalidInput;
    }
    bool acyclic_single_source = topological_order(g).has_value() && g.sources().count() == 1;
    KernelCertificate cert;
    std::string algorithm;
    if (g.order() == 1) {
        cert = KernelCertificate{VertexSet::single(1, 0), k, Rational(1)};
        algorithm = "acyclic-k-kernel";
    } else if (acyclic_single_source && k >= 1) {
        cert = k_kernel_single_source_acyclic(g, k);
        algorithm = "acyclic-k-kernel";
    } else if (spanning_arborescence(g)) {
        if (k < 2) {
            std::cerr << "error: the arborescence route needs k >= 2\n";
            return kExitInvalidInput;
        }
        cert = k_kernel_arborescence(g, k);
        algorithm = "arborescence-k-kernel";
    } else {
        std::cerr << "error: no construction applies (need an acyclic single-source digraph or a "
                     "spanning arborescence)\n";
        return kExitInvalidInput;
    }
    print_result(certificate_json(algorithm, inst, cert));
    return kExitOk;
}

int run_verify(const std::string& instance_path, const std::string& cert_path) {
    using namespace dgk;
    ParsedInstance inst = parse_instance(read_file(instance_path));
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(cert_path));
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: bad certificate JSON: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    CertificateVerification v = verify_certificate_json(doc, inst);
    nlohmann::json out;
    out["valid"] = v.ok;
    if (!v.ok) out["reason"] = v.reason;
    print_result(out);
    if (!v.ok) {
        std::cerr << "verification failed: " << v.reason << "\n";
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_search(const std::string& family_name_arg, int n, int jobs, const std::string& resume,
               const std::string& checkpoint_path, const std::string& outdir) {
    using namespace dgk;
    auto fam = family_from_name(family_name_arg);
    if (!fam) {
        std::cerr << "error: unknown family '" << family_name_arg << "'\n";
        return kExitInvalidInput;
    }
    SweepConfig cfg;
    cfg.jobs = jobs;
    if (!resume.empty()) {
        Checkpoint cp = parse_checkpoint(read_file(resume));
        if (cp.family != *fam || cp.n != n) {
            std::cerr << "error: checkpoint is for another sweep\n";
            return kExitInvalidInput;
        }
        cfg.start_index = cp.next_index;
        cfg.prior_instances = cp.instances;
        cfg.prior_holds = cp.holds;
        cfg.prior_ratio = cp.max_kernel_ratio;
        std::cerr << "note: resuming at index " << cp.next_index << "\n";
    }
    if (!checkpoint_path.empty())
        cfg.checkpoint_sink = [&](const std::string& text) {
            std::ofstream out(checkpoint_path, std::ios::trunc);
            out << text;
        };
    SweepReport rep = run_family_sweep(*fam, n, cfg);

    nlohmann::json doc;
    doc["family"] = family_name(rep.family);
    doc["n"] = rep.n;
    doc["instances"] = rep.instances;
    doc["holds"] = rep.holds;
    doc["failures"] = rep.failures;
    doc["counterexamples"] = rep.counterexamples;
    doc["max_kernel_ratio"] = rep.max_kernel_ratio.str();
    print_result(doc);

    for (const auto& a : rep.anomalies) {
        std::string stem = outdir + (outdir.empty() ? "" : "/") +
                           (a.counterexample ? "counterexample-" : "failure-") +
                           family_name(rep.family) + "-" + std::to_string(rep.n) + "-" +
                           std::to_string(a.index);
        std::ofstream gi(stem + ".digraph");
        gi << a.instance_text;
        nlohmann::json note;
        note["index"] = a.index;
        note["reason"] = a.reason;
        note["family"] = family_name(rep.family);
        if (a.counterexample) {
            // Independent minimality evidence for the refutation.
            ParsedInstance pi = parse_instance(a.instance_text);
            auto best = min_k_kernel_bruteforce(pi.g, 2);
            if (best) {
                note["min_two_kernel_size"] = best->first;
                note["min_two_kernel"] = best->second.to_vector();
            } else {
                note["min_two_kernel_size"] = nullptr;
            }
            note["threshold"] = Rational(pi.g.order(), 2).str();
        }
        std::ofstream nj(stem + ".json");
        nj << dump_json(note);
        std::cerr << (a.counterexample ? "counterexample: " : "failure: ") << stem << ".digraph ("
                  << a.reason << ")\n";
    }
    if (rep.counterexamples > 0) return kExitCounterexample;
    if (rep.failures > 0) return kExitInvariant;
    return kExitOk;
}

int run_gen(const std::string& kind_name, int n, int ns, int nt, double density, int extra,
            std::uint64_t seed) {
    using namespace dgk;
    auto kind = gen_kind_from_name(kind_name);
    if (!kind) {
        std::cerr << "error: unknown generator kind '" << kind_name << "'\n";
        return kExitInvalidInput;
    }
    GeneratorSpec spec;
    spec.kind = *kind;
    spec.n = n;
    spec.n_s = ns;
    spec.n_t = nt;
    spec.density = density;
    spec.extra = extra;
    spec.seed = seed;
    GeneratedInstance out = generate(spec);
    std::cout << emit_instance(out.g, out.S ? &*out.S : nullptr);
    return kExitOk;
}

int run_tight(int k, int m) {
    using namespace dgk;
    Digraph g = tight_instance(k, m);
    std::cout << emit_instance(g);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digraph kernels: constructive algorithms, oracles and exhaustive search"};
    app.require_subcommand(1);

    std::string instance_path, cert_path, family, resume, checkpoint_path, outdir, kind, nplus_mode;
    bool allow_digons = false;
    int k = 2, m = 1, n = 0, ns = 0, nt = 0, jobs = 0, extra = 0;
    long long uniform_weight = -1;
    double density = 0.5;
    std::uint64_t seed = 0;

    auto* sq = app.add_subcommand("split-qk", "2-kernel of size <= |G|/2 for a split digraph");
    sq->add_option("file", instance_path)->required();
    sq->add_flag("--allow-digons", allow_digons, "reduce digons first (needs a source-free digraph)");

    auto* l2 = app.add_subcommand("large2k", "weighted 2-kernel covering half the weight on a break");
    l2->add_option("file", instance_path)->required();
    l2->add_option("--uniform-weight", uniform_weight, "weight for every vertex when the file has none");
    l2->add_option("--nplus-mode", nplus_mode, "open|closed: reported coverage neighbourhood, plus a mixed-conjecture check")
        ->check(CLI::IsMember({"open", "closed"}));

    auto* kk = app.add_subcommand("kkernel", "bounded k-kernel via the acyclic or arborescence route");
    kk->add_option("file", instance_path)->required();
    kk->add_option("-k", k, "covering radius")->required();

    auto* ve = app.add_subcommand("verify", "re-verify a certificate against its instance");
    ve->add_option("instance", instance_path)->required();
    ve->add_option("certificate", cert_path)->required();

    auto* se = app.add_subcommand("search", "exhaustive family sweep with conjecture checks");
    se->add_option("--family", family)->required();
    se->add_option("--n", n)->required();
    se->add_option("--jobs", jobs, "worker threads (default: hardware)");
    se->add_option("--resume", resume, "checkpoint file to resume from");
    se->add_option("--checkpoint", checkpoint_path, "checkpoint file to write");
    se->add_option("--outdir", outdir, "directory for anomaly artifacts");

    auto* ge = app.add_subcommand("gen", "seeded random instance generator");
    ge->add_option("--kind", kind)->required();
    ge->add_option("--n", n);
    ge->add_option("--ns", ns, "stable/acyclic side size");
    ge->add_option("--nt", nt, "tournament side size");
    ge->add_option("--density", density);
    ge->add_option("--extra", extra, "extra edges");
    ge->add_option("--seed", seed);

    auto* ti = app.add_subcommand("tight", "family whose minimum k-kernel meets the acyclic bound");
    ti->add_option("-k", k)->required();
    ti->add_option("-m", m, "branch count")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitInvalidInput : kExitOk;
    }

    int guard = env_size_guard(18);
    try {
        if (sq->parsed()) return run_split_qk(instance_path, allow_digons);
        if (l2->parsed()) return run_large2k(instance_path, uniform_weight, nplus_mode, guard);
        if (kk->parsed()) return run_kkernel(instance_path, k);
        if (ve->parsed()) return run_verify(instance_path, cert_path);
        if (se->parsed()) return run_search(family, n, jobs, resume, checkpoint_path, outdir);
        if (ge->parsed()) return run_gen(kind, n, ns, nt, density, extra, seed);
        if (ti->parsed()) return run_tight(k, m);
    } catch (const dgk::size_guard_error& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const dgk::invariant_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const dgk::validation_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
