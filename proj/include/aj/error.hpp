#pragma once

#include <stdexcept>
#include <string>

namespace aj {

// Base for all library errors. CLI exit codes: InvalidSpec -> 1, Divergence -> 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration, bad matrix, unachievable calibration target.
struct InvalidSpec : Error {
    using Error::Error;
};

// A non-stochastic or non-ergodic matrix was supplied.
struct InvalidMatrix : InvalidSpec {
    using InvalidSpec::InvalidSpec;
};

// Caller broke a documented precondition (out-of-range action, missing cache).
struct ContractViolation : Error {
    using Error::Error;
};

// Non-finite loss or gradient during training.
struct Divergence : Error {
    using Error::Error;
};

} // namespace aj
