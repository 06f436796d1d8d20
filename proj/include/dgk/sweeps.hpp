#ifndef DGK_SWEEPS_HPP
#define DGK_SWEEPS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dgk/enumerate.hpp"
#include "dgk/rational.hpp"

namespace dgk {

// One suspicious instance from a sweep. `counterexample` separates
// refuted-conjecture events from internal failures of a constructive
// algorithm.
struct SweepAnomaly {
    std::uint64_t index = 0;
    bool counterexample = false;
    std::string reason;
    std::string instance_text;
};

struct SweepReport {
    Family family = Family::all_digraphs;
    int n = 0;
    std::uint64_t instances = 0;
    std::uint64_t holds = 0;
    std::uint64_t failures = 0;        // internal invariant violations
    std::uint64_t counterexamples = 0;
    Rational max_kernel_ratio{0, 1};   // max |K|/|G| over split runs
    std::vector<SweepAnomaly> anomalies; // capped at 32, ordered by index

    bool clean() const { return failures == 0 && counterexamples == 0; }
};

struct SweepConfig {
    int jobs = 0;                        // 0: hardware concurrency
    bool dedup = true;                   // labelled stream when off (acyclic families)
    std::uint64_t start_index = 0;
    std::uint64_t prior_instances = 0;   // tallies carried over a resume
    std::uint64_t prior_holds = 0;
    Rational prior_ratio{0, 1};
    std::uint64_t checkpoint_every = 1u << 21;
    std::function<void(const std::string&)> checkpoint_sink; // receives checkpoint text
};

// Runs the family's check bundle over the exhaustive stream:
//   split                 -> constructive quasi-kernel, verified, 2|K| <= |G|
//   break                 -> weighted special kernels, all-ones plus 20
//                            seeded {0,1,2} maps per instance
//   no-source-oriented    -> minimum 2-kernel of size at most |G|/2
//   all-oriented          -> a 2-kernel exists; some 2-kernel has
//                            |N+[K]| >= |G|/2
//   acyclic               -> exactly one stable 1-covering set, equal to
//                            the constructed one
//   single-source-acyclic -> constructive k-kernels within bounds and at
//                            least the brute-force optimum, k <= 4
SweepReport run_family_sweep(Family family, int n, const SweepConfig& cfg = {});

std::string checkpoint_text(const SweepReport& report, std::uint64_t next_index);

struct Checkpoint {
    Family family;
    int n = 0;
    std::uint64_t next_index = 0;
    std::uint64_t instances = 0;
    std::uint64_t holds = 0;
    Rational max_kernel_ratio{0, 1};
};

Checkpoint parse_checkpoint(const std::string& text);

} // namespace dgk

#endif
