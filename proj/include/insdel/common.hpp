#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace insdel {

// A word over F_q: coordinates are the integer encodings of field elements.
using Word = std::vector<int>;

inline constexpr const char* kToolName = "insdel-lab";
inline constexpr const char* kToolVersion = "0.1.0";

// Enumeration guards. Overridable per call, via CLI flags, or through the
// INSDEL_LAB_GUARD environment variable.
inline constexpr long kDefaultMaxCodewords = 65536;
inline constexpr long kDefaultMaxSubspaces = 1000000;

// Bad parameters or malformed input files. CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration guard or search budget was exceeded. CLI exit code 3.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An applicable upper bound fell below the exact oracle value. CLI exit code 4.
struct soundness_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant (never expected on valid inputs).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace insdel
