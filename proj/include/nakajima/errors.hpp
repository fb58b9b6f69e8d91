#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nakajima {

// Base of everything the library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: malformed text, out-of-range index, mismatched specs.
struct usage_error : error {
    using error::error;
};

struct parse_error : usage_error {
    std::size_t position;
    parse_error(const std::string& what, std::size_t pos)
        : usage_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct precondition_error : usage_error {
    using usage_error::usage_error;
};

struct not_in_n : usage_error {
    not_in_n() : usage_error("matrix is not in N") {}
};

struct cap_exceeded : error {
    std::size_t cap;
    explicit cap_exceeded(std::size_t c)
        : error("component exceeds node cap " + std::to_string(c)), cap(c) {}
};

// A property that holds by theory failed. Always an upstream bug or a defect
// in the rule being implemented.
struct invariant_violation : error {
    using error::error;
};

struct reduction_violated : invariant_violation {
    using invariant_violation::invariant_violation;
};

struct inverse_law_violated : invariant_violation {
    using invariant_violation::invariant_violation;
};

struct non_termination : invariant_violation {
    std::size_t cap;
    explicit non_termination(std::size_t c)
        : invariant_violation("compression did not stabilise within " + std::to_string(c) + " steps"),
          cap(c) {}
};

struct multiple_sources : invariant_violation {
    multiple_sources() : invariant_violation("crystal graph has more than one source") {}
};

struct decomposition_violated : invariant_violation {
    using invariant_violation::invariant_violation;
};

}  // namespace nakajima
