#pragma once

#include <stdexcept>
#include <string>

namespace lpsign {

/// Base class for all lpsign errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

/// Mixing the exact-rational and error-tracked float backends in one operation.
struct BackendMismatchError : Error {
    BackendMismatchError() : Error("backend mismatch: operands use different coefficient backends") {}
};

/// Malformed input text (spec documents, rational literals, CLI values).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace lpsign
