#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bourdeg {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejections of user input (CLI exit code 2).
struct InputError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    std::size_t offset;
    ParseError(const std::string& what, std::size_t off)
        : InputError(what + " at offset " + std::to_string(off)), offset(off) {}
};

struct NotReducedError : InputError {
    using InputError::InputError;
};

struct ConeInputError : InputError {
    using InputError::InputError;
};

struct BadCharacteristicError : InputError {
    using InputError::InputError;
};

struct BadFieldError : InputError {
    using InputError::InputError;
};

// Failures of the computation itself (CLI exit code 1).
struct RetriesExhaustedError : Error {
    using Error::Error;
};

struct NonIsolatedCriticalError : Error {
    using Error::Error;
};

struct InternalInconsistencyError : Error {
    using Error::Error;
};

// Always-on invariant check; these guard theorems the code relies on,
// so they must not vanish under NDEBUG.
inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw InternalInconsistencyError(msg);
}

}  // namespace bourdeg
