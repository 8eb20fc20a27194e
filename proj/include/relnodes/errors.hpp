#pragma once

#include <stdexcept>
#include <string>

namespace relnodes {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition on user-supplied data failed (CLI exit code 2).
// The message names the governing condition.
struct DomainError : Error {
    using Error::Error;
};

// A golden-table or cross-oracle comparison failed (CLI exit code 3).
struct VerificationError : Error {
    using Error::Error;
};

// Request is outside the supported resource envelope (CLI exit code 4).
struct ResourceError : Error {
    using Error::Error;
};

// Interpolation got a consistent degree bound wrong upstream.
struct DegreeOverflowError : Error {
    using Error::Error;
};

}  // namespace relnodes
