#pragma once

#include <stdexcept>
#include <string>

namespace maxgal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation was violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Raised when the requested genus has no (2G+eps) tuple.
class ExceptionalGenusError : public Error {
public:
    ExceptionalGenusError(int genus, const std::string& message)
        : Error(message), genus_(genus) {}

    int genus() const noexcept { return genus_; }

private:
    int genus_;
};

} // namespace maxgal
