#pragma once

#include <stdexcept>
#include <string>

namespace graphpoly {

/// Input text could not be decoded (graph6, edge list, property or family spec).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation was asked for an input beyond its configured order/size bound.
class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An algebraic identity that must hold exactly did not (e.g. nonzero remainder
/// in an exact division). Never caught internally.
class IdentityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Order/size bounds for the exhaustive algorithms. Defaults are the values
/// every in-scope workload stays under; each may be raised through the
/// environment up to its hard cap.
struct Limits {
    int canonical_order = 10;    // canonical_form, contains
    int harary_order = 12;       // set-partition enumeration (per component when allowed)
    int chromatic_order = 12;    // deletion-contraction
    int tutte_edges = 16;        // Tutte state sum, matching enumeration
    int xi_edges = 15;           // xi state sum
    int xi_order = 10;           // xi recursion
    int subset_order = 16;       // vertex-subset generating functions
    int spectrum_order = 10;     // characteristic polynomials
    long long direct_colorings = 10'000'000;  // k^n for the direct coloring count
};

struct LimitCaps {
    static constexpr int canonical_order = 12;
    static constexpr int harary_order = 14;
    static constexpr int chromatic_order = 16;
    static constexpr int tutte_edges = 24;
    static constexpr int xi_edges = 18;
    static constexpr int xi_order = 12;
    static constexpr int subset_order = 24;
    static constexpr int spectrum_order = 32;
    static constexpr long long direct_colorings = 1'000'000'000;
};

/// Process-wide limits. Read-only after startup.
const Limits& limits();

/// Replace the process-wide limits. Throws std::invalid_argument when a value
/// exceeds its hard cap or is negative.
void set_limits(const Limits& l);

/// Apply GRAPHPOLY_<NAME> environment overrides (e.g. GRAPHPOLY_HARARY_ORDER=13)
/// on top of the defaults. Throws std::invalid_argument on malformed or
/// out-of-cap values.
Limits limits_from_environment();

/// Throws BoundExceeded("<what>: <value> exceeds bound <bound>") when value > bound.
void require_within(const char* what, long long value, long long bound);

}  // namespace graphpoly
