#pragma once

#include <stdexcept>
#include <string>

namespace cgb {

// Malformed input: bad construction arguments, unparsable files, boards
// that fail validation where a valid one is required. Maps to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Both players satisfy their winning condition, or a full coloring has no
// winner. Signals a bug or an invalid board, never expected on validated
// input. Maps to exit code 2.
struct TheoremViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cgb
