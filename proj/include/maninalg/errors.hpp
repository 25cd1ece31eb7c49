#pragma once

#include <stdexcept>
#include <string>

namespace manin {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live in different rings.
struct ring_mismatch_error : error {
    using error::error;
};

// Matrix/series shape or parameter incompatibility.
struct shape_error : error {
    using error::error;
};

// Word-length cap (or similar bound) exceeded.
struct resource_limit_error : error {
    using error::error;
};

// A stated precondition does not hold (non-unit constant term, bad index set, ...).
struct precondition_error : error {
    using error::error;
};

// Malformed textual input (ring config, rule file, polynomial).
struct parse_error : error {
    using error::error;
};

// A preset failed its build-time self-test (non-terminating order, divergent
// critical pair, duplicate generator name).
struct construction_error : error {
    using error::error;
};

} // namespace manin
