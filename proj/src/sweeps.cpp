#include "dgk/sweeps.hpp"

#include <algorithm>
#include <condition_variable>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "dgk/acyclic_kernels.hpp"
#include "dgk/break_kernel.hpp"
#include "dgk/io.hpp"
#include "dgk/oracle.hpp"
#include "dgk/split_qk.hpp"

namespace dgk {

namespace {

struct Item {
    std::uint64_t index;
    SmallDigraph g;
    std::uint8_t smask;
};

struct WorkerTally {
    std::uint64_t instances = 0;
    std::uint64_t holds = 0;
    std::uint64_t failures = 0;
    std::uint64_t counterexamples = 0;
    int max_num = 0, max_den = 1; // kernel ratio as a fraction over small ints
    std::vector<SweepAnomaly> anomalies;

    void ratio(int num, int den) {
        if (static_cast<long long>(num) * max_den > static_cast<long long>(max_num) * den) {
            max_num = num;
            max_den = den;
        }
    }
};

VertexSet smask_to_set(int n, std::uint8_t smask) {
    VertexSet S(n);
    for (int v = 0; v < n; ++v)
        if ((smask >> v) & 1u) S.set(v);
    return S;
}

std::string small_instance_text(const SmallDigraph& g, std::uint8_t smask, bool has_s,
                                const WeightMap* f = nullptr) {
    Digraph dg = g.to_digraph();
    VertexSet S = smask_to_set(g.n, smask);
    return emit_instance(dg, has_s ? &S : nullptr, f);
}

// Instance checks, one per family. They run on worker threads over
// private state only.
struct Checker {
    Family family;

    void check(const Item& item, WorkerTally& tally) const {
        switch (family) {
            case Family::split: return check_split(item, tally);
            case Family::brk: return check_break(item, tally);
            case Family::no_source_oriented: return check_no_source(item, tally);
            case Family::all_digraphs: return check_all(item, tally);
            case Family::acyclic: return check_acyclic(item, tally);
            case Family::single_source_acyclic: return check_ss_acyclic(item, tally);
        }
    }

    void check_split(const Item& item, WorkerTally& tally) const {
        Digraph g = item.g.to_digraph();
        VertexSet S = smask_to_set(item.g.n, item.smask);
        try {
            SplitPartition split{S, g.vertices() - S};
            KernelCertificate cert = small_quasi_kernel(g, split);
            tally.ratio(cert.kernel.count(), g.order());
            if (2 * cert.kernel.count() <= g.order()) {
                ++tally.holds;
            } else {
                ++tally.failures;
                tally.anomalies.push_back({item.index, false, "kernel larger than |G|/2",
                                           small_instance_text(item.g, item.smask, true)});
            }
        } catch (const error& e) {
            ++tally.failures;
            tally.anomalies.push_back(
                {item.index, false, e.what(), small_instance_text(item.g, item.smask, true)});
        }
    }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    void check_break(const Item& item, WorkerTally& tally) const {
        Digraph g = item.g.to_digraph();
        VertexSet S = smask_to_set(item.g.n, item.smask);
        BreakPartition brk{S, g.vertices() - S};
        // All-ones plus 20 deterministically seeded {0,1,2} maps.
        thread_local std::vector<WeightMap> maps;
        maps.resize(21);
        for (auto& f : maps) f.w.assign(static_cast<std::size_t>(g.order()), 1);
        std::uint64_t state = 0x5eed5eedULL ^ item.index;
        for (int i = 1; i <= 20; ++i)
            for (int v = 0; v < g.order(); ++v) {
                state = splitmix64(state);
                maps[static_cast<std::size_t>(i)].w[static_cast<std::size_t>(v)] =
                    static_cast<long long>(state % 3);
            }
        try {
            auto kernels = large_two_kernel_batch(g, brk, maps);
            (void)kernels; // verification happens inside
            ++tally.holds;
        } catch (const error& e) {
            ++tally.failures;
            tally.anomalies.push_back(
                {item.index, false, e.what(), small_instance_text(item.g, item.smask, true)});
        }
    }

    void check_no_source(const Item& item, WorkerTally& tally) const {
        Digraph g = item.g.to_digraph();
        auto verdict = check_small_qk_conjecture(g);
        if (verdict.holds()) {
            ++tally.holds;
        } else {
            ++tally.counterexamples;
            tally.anomalies.push_back({item.index, true, "no 2-kernel of size at most |G|/2",
                                       small_instance_text(item.g, 0, false)});
        }
    }

    void check_all(const Item& item, WorkerTally& tally) const {
        Digraph g = item.g.to_digraph();
        if (!two_kernel_exists(g)) {
            ++tally.counterexamples;
            tally.anomalies.push_back(
                {item.index, true, "digraph without any 2-kernel", small_instance_text(item.g, 0, false)});
            return;
        }
        if (!large_closed_neighbourhood_two_kernel(g)) {
            ++tally.counterexamples;
            tally.anomalies.push_back({item.index, true,
                                       "no 2-kernel reaches half the vertices with N+[K]",
                                       small_instance_text(item.g, 0, false)});
            return;
        }
        ++tally.holds;
    }

    void check_acyclic(const Item& item, WorkerTally& tally) const {
        const SmallDigraph& sg = item.g;
        const int nn = sg.n;
        const std::uint32_t all = (1u << nn) - 1u;
        std::uint32_t out[8], in[8], cov1[8];
        for (int v = 0; v < nn; ++v) {
            out[v] = sg.row[static_cast<std::size_t>(v)];
            cov1[v] = out[v] | (1u << v);
            in[v] = 0;
        }
        for (int u = 0; u < nn; ++u)
            for (std::uint32_t r = out[u]; r;) {
                int v = std::countr_zero(r);
                r &= r - 1;
                in[v] |= 1u << u;
            }
        // Greedy over a smallest-id topological peel: join unless an
        // in-neighbour already joined.
        std::uint32_t kernel = 0, remaining = all;
        while (remaining) {
            int pick = -1;
            for (std::uint32_t r = remaining; r;) {
                int v = std::countr_zero(r);
                r &= r - 1;
                if (!(in[v] & remaining)) { pick = v; break; }
            }
            if (pick < 0) { // cyclic: cannot happen for this family
                ++tally.failures;
                tally.anomalies.push_back(
                    {item.index, false, "cyclic instance in the acyclic family",
                     small_instance_text(item.g, 0, false)});
                return;
            }
            if (!(in[pick] & kernel)) kernel |= 1u << pick;
            remaining &= ~(1u << pick);
        }
        // Exhaustive uniqueness: exactly one stable 1-covering subset.
        int found = 0;
        bool matches = false;
        for (std::uint32_t m = 1; m <= all; ++m) {
            std::uint32_t covered = 0;
            bool stable = true;
            for (std::uint32_t r = m; r;) {
                int v = std::countr_zero(r);
                r &= r - 1;
                if (out[v] & m) { stable = false; break; }
                covered |= cov1[v];
            }
            if (!stable || covered != all) continue;
            ++found;
            if (m == kernel) matches = true;
            if (found > 1) break;
        }
        if (found == 1 && matches) {
            ++tally.holds;
        } else {
            ++tally.failures;
            tally.anomalies.push_back({item.index, false,
                                       found == 1 ? "computed 1-kernel differs from the unique one"
                                                  : "acyclic digraph without a unique 1-kernel",
                                       small_instance_text(item.g, 0, false)});
        }
    }

    void check_ss_acyclic(const Item& item, WorkerTally& tally) const {
        Digraph g = item.g.to_digraph();
        bool ok = true;
        std::string why;
        for (int k = 1; k <= 4 && ok; ++k) {
            if (g.order() < 2) break;
            try {
                KernelCertificate cert = k_kernel_single_source_acyclic(g, k);
                auto best = min_k_kernel_bruteforce(g, k);
                if (!best || cert.kernel.count() < best->first) {
                    ok = false;
                    why = "construction beat the brute-force optimum (impossible)";
                }
                if (ok && static_cast<long long>(k) * cert.kernel.count() > k + g.order() - 2) {
                    ok = false;
                    why = "k-kernel bound violated at k=" + std::to_string(k);
                }
            } catch (const error& e) {
                ok = false;
                why = e.what();
            }
        }
        if (ok) {
            ++tally.holds;
        } else {
            ++tally.failures;
            tally.anomalies.push_back({item.index, false, why, small_instance_text(item.g, 0, false)});
        }
    }
};

} // namespace

SweepReport run_family_sweep(Family family, int n, const SweepConfig& cfg) {
    SweepReport report;
    report.family = family;
    report.n = n;
    report.instances = cfg.prior_instances;
    report.holds = cfg.prior_holds;
    report.max_kernel_ratio = cfg.prior_ratio;

    int jobs = cfg.jobs > 0 ? cfg.jobs : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;

    Checker checker{family};

    constexpr std::size_t kBatch = 8192;
    constexpr std::size_t kQueueCap = 4;
    struct Shared {
        std::mutex mu;
        std::condition_variable cv_full, cv_empty;
        std::deque<std::vector<Item>> queue;
        bool done = false;
    } shared;

    std::mutex tally_mu;
    WorkerTally total;

    auto drain = [&](std::vector<Item>& items) {
        WorkerTally local;
        for (const Item& it : items) {
            ++local.instances;
            checker.check(it, local);
        }
        std::lock_guard<std::mutex> lock(tally_mu);
        total.instances += local.instances;
        total.holds += local.holds;
        total.failures += local.failures;
        total.counterexamples += local.counterexamples;
        total.ratio(local.max_num, local.max_den);
        for (auto& a : local.anomalies)
            if (total.anomalies.size() < 32) total.anomalies.push_back(std::move(a));
    };

    std::vector<std::thread> workers;
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&]() {
            std::vector<Item> mine;
            while (true) {
                {
                    std::unique_lock<std::mutex> lock(shared.mu);
                    shared.cv_full.wait(lock, [&] { return !shared.queue.empty() || shared.done; });
                    if (shared.queue.empty()) return;
                    mine.swap(shared.queue.front());
                    shared.queue.pop_front();
                    shared.cv_empty.notify_all();
                }
                drain(mine);
                mine.clear();
            }
        });
    }

    EnumerationSpec spec;
    spec.family = family;
    spec.n = n;
    spec.dedup = cfg.dedup;

    std::vector<Item> pending;
    pending.reserve(kBatch);
    std::uint64_t next_index = cfg.start_index;
    std::uint64_t since_checkpoint = 0;

    auto flush = [&](bool final_flush) {
        if (!pending.empty()) {
            std::unique_lock<std::mutex> lock(shared.mu);
            shared.cv_empty.wait(lock, [&] { return shared.queue.size() < kQueueCap; });
            shared.queue.push_back(std::move(pending));
            shared.cv_full.notify_one();
            pending = {};
            pending.reserve(kBatch);
        }
        if (final_flush) {
            std::unique_lock<std::mutex> lock(shared.mu);
            shared.done = true;
            shared.cv_full.notify_all();
        }
    };

    std::exception_ptr producer_error;
    try {
        enumerate_small(spec, cfg.start_index,
                    [&](std::uint64_t index, const SmallDigraph& g, std::uint8_t smask, bool) {
                        pending.push_back(Item{index, g, smask});
                        next_index = index + 1;
                        if (pending.size() >= kBatch) {
                            flush(false);
                            since_checkpoint += kBatch;
                            if (cfg.checkpoint_sink && since_checkpoint >= cfg.checkpoint_every) {
                                since_checkpoint = 0;
                                // Wait for the queue to drain so the
                                // written tallies cover a contiguous
                                // prefix of the stream.
                                {
                                    std::unique_lock<std::mutex> lock(shared.mu);
                                    shared.cv_empty.wait(lock, [&] { return shared.queue.empty(); });
                                }
                                SweepReport snap = report;
                                std::uint64_t upto;
                                {
                                    std::lock_guard<std::mutex> lock(tally_mu);
                                    snap.instances = report.instances + total.instances;
                                    snap.holds = report.holds + total.holds;
                                    Rational seen(total.max_num, total.max_den);
                                    if (snap.max_kernel_ratio < seen) snap.max_kernel_ratio = seen;
                                    upto = cfg.start_index + total.instances;
                                }
                                cfg.checkpoint_sink(checkpoint_text(snap, upto));
                            }
                        }
                        return true;
                    });
    } catch (...) {
        producer_error = std::current_exception();
    }
    flush(true);
    for (auto& w : workers) w.join();
    if (producer_error) std::rethrow_exception(producer_error);

    report.instances += total.instances;
    report.holds += total.holds;
    report.failures = total.failures;
    report.counterexamples = total.counterexamples;
    Rational seen(total.max_num, total.max_den);
    if (report.max_kernel_ratio < seen) report.max_kernel_ratio = seen;
    std::sort(total.anomalies.begin(), total.anomalies.end(),
              [](const SweepAnomaly& a, const SweepAnomaly& b) { return a.index < b.index; });
    report.anomalies = std::move(total.anomalies);
    if (cfg.checkpoint_sink) cfg.checkpoint_sink(checkpoint_text(report, next_index));
    return report;
}

std::string checkpoint_text(const SweepReport& report, std::uint64_t next_index) {
    std::ostringstream out;
    out << "dgk-checkpoint 1\n";
    out << "family " << family_name(report.family) << "\n";
    out << "n " << report.n << "\n";
    out << "next_index " << next_index << "\n";
    out << "instances " << report.instances << "\n";
    out << "holds " << report.holds << "\n";
    out << "failures " << report.failures << "\n";
    out << "counterexamples " << report.counterexamples << "\n";
    out << "max_ratio " << report.max_kernel_ratio.str() << "\n";
    return out.str();
}

Checkpoint parse_checkpoint(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "dgk-checkpoint" || version != 1)
        throw validation_error(validation_error::kind::syntax, "not a checkpoint file");
    Checkpoint cp;
    std::string key;
    while (in >> key) {
        if (key == "family") {
            std::string name;
            in >> name;
            auto f = family_from_name(name);
            if (!f) throw validation_error(validation_error::kind::syntax, "unknown family in checkpoint");
            cp.family = *f;
        } else if (key == "n") {
            in >> cp.n;
        } else if (key == "next_index") {
            in >> cp.next_index;
        } else if (key == "instances") {
            in >> cp.instances;
        } else if (key == "holds") {
            in >> cp.holds;
        } else if (key == "failures" || key == "counterexamples") {
            std::uint64_t ignored;
            in >> ignored;
        } else if (key == "max_ratio") {
            std::string r;
            in >> r;
            cp.max_kernel_ratio = Rational::parse(r);
        } else {
            std::string skip;
            in >> skip;
        }
    }
    return cp;
}

} // namespace dgk
