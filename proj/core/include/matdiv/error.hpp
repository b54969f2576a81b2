#pragma once

#include <stdexcept>
#include <string>

namespace matdiv {

// Base class of everything the library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatch between operands (rows/cols/ambient dimension).
struct dimension_error : error {
    using error::error;
};

// A truncated-series computation ran out of known coefficients, or an
// object is singular within the available window.
struct precision_error : error {
    using error::error;
};

// Mathematically invalid input: non-dominant coweight, coweight outside
// the dual weight lattice, division by zero, singular change of basis.
struct domain_error : error {
    using error::error;
};

// Unsupported family/rank/module combination or inconsistent scene data.
struct config_error : error {
    using error::error;
};

// Malformed text input: scalar literals, JSON scene or germ files.
struct parse_error : error {
    using error::error;
};

} // namespace matdiv
