#pragma once

#include <stdexcept>
#include <string>

namespace partot {

// Base for every error raised by the library. The CLI maps the three
// subclasses to exit codes 2, 3 and 4.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON, wrong shapes, unknown labels.
class InputError : public Error {
public:
    using Error::Error;
};

/// A structural invariant of a value does not hold (e.g. a relation with a
/// cycle, a boundary operator with nonzero square).
class InvariantError : public Error {
public:
    using Error::Error;
};

/// A mathematical precondition of an operation is not met (e.g. the fence
/// condition for an inclusion, an empty slice, a map that is not a
/// quasi-isomorphism).
class PreconditionError : public Error {
public:
    using Error::Error;
};

} // namespace partot
