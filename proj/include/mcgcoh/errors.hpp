#pragma once

#include <stdexcept>
#include <string>

namespace mcgcoh {

// All library failures derive from Error so callers (the CLI in particular)
// can map them onto exit statuses without catching std::exception wholesale.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands built for different genera, or a class/matrix of the wrong size.
class DimensionError : public Error {
public:
    using Error::Error;
};

// A curve id that does not resolve in the relevant curve table.
class LookupError : public Error {
public:
    using Error::Error;
};

// Declared relation metadata disagrees with the computed intersections.
class MetadataError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its precondition (zero class, genus < 3,
// aliasing grid, mean-zero violation, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Generator values violate a relation, so they define no cocycle.
class CocycleError : public Error {
public:
    using Error::Error;
};

// Integer coordinates left the int64 range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace mcgcoh
