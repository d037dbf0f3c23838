#ifndef GRAPHLAP_ERROR_HPP_
#define GRAPHLAP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace graphlap {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid argument or query outside the object's domain (unknown vertex,
/// malformed region, ...).
struct DomainError : Error {
    using Error::Error;
};

/// A stated precondition does not hold (e.g. the quadratic form is not
/// positive definite where a solve requires it).
struct PreconditionError : Error {
    using Error::Error;
};

/// A size or budget cap was exceeded; the operation refuses rather than
/// switching methods silently.
struct CapacityError : Error {
    using Error::Error;
};

/// The target was not reached within the supplied exploration horizon.
struct UnreachableError : Error {
    using Error::Error;
};

/// The horizon was exhausted without deciding the query.
struct UndeterminedError : Error {
    using Error::Error;
};

/// A certified mathematical fact failed numerically; signals a bug upstream,
/// never a property of the input.
struct InternalInconsistencyError : Error {
    using Error::Error;
};

/// Text input rejected; carries a 1-based line number.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace graphlap

#endif  // GRAPHLAP_ERROR_HPP_
