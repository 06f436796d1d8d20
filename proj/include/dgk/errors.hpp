#ifndef DGK_ERRORS_HPP
#define DGK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dgk {

// Base class for everything this library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input: malformed edge lists, bad partitions, violated
// preconditions, parse errors. Maps to CLI exit status 1.
struct validation_error : error {
    enum class kind {
        loop_edge,
        duplicate_edge,
        id_out_of_range,
        not_a_partition,
        not_oriented,
        not_a_tournament,
        stable_set_violated,
        not_acyclic,
        has_source,
        missing_source,
        bad_precondition,
        syntax,
    };

    validation_error(kind k, const std::string& what) : error(what), which(k) {}
    kind which;
};

// A size guard refused to start an enumeration or brute-force search.
// Maps to CLI exit status 3.
struct size_guard_error : error {
    using error::error;
};

// A step the underlying arguments guarantee to succeed did not, or a
// constructed kernel failed verification. Signals a bug, never expected
// on valid inputs. Maps to CLI exit status 5.
struct invariant_violation : error {
    using error::error;
};

} // namespace dgk

#endif
