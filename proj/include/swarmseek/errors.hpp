#pragma once

#include <stdexcept>
#include <string>

namespace swarmseek {

/// Config file could not be parsed (message carries the line number).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A config value violates an invariant (message names the offending key).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Third-order parameters failed the stability gate and allow_unstable is off.
struct StabilityRejection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace swarmseek
