#pragma once

#include <stdexcept>
#include <string>

namespace intlen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a special function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent input parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// Input that makes the requested quantity undefined (proportional classes,
/// identical arcs, n = 0 ...).
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// Collar construction requested in a mode its parameters do not allow.
class ModeError : public Error {
public:
    using Error::Error;
};

/// Shrunk collar would have non-positive width.
class WidthError : public Error {
public:
    using Error::Error;
};

/// Enumeration range contains nothing to search.
class EmptySearchError : public Error {
public:
    using Error::Error;
};

/// Enumeration range too small to find a pair with the requested property.
class CutoffTooSmallError : public Error {
public:
    using Error::Error;
};

/// Input violating the preconditions of a consistency check.
class RejectedInputError : public Error {
public:
    using Error::Error;
};

/// A crossing oracle hit a measure-zero configuration (crossing on a seam,
/// shared endpoint). The caller is expected to perturb the input and retry.
class RetrySignal : public Error {
public:
    using Error::Error;
};

}  // namespace intlen
