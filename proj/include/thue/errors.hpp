#pragma once

#include <stdexcept>
#include <string>

namespace thue {

// Base of every error the toolkit raises for bad input or unmet hypotheses.
class ThueError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An operation was called outside its documented precondition.
class InvalidInput : public ThueError {
public:
    using ThueError::ThueError;
};

// Root differences have fractional valuation (or the roots leave every
// unramified extension we are willing to build), so tracked mode is off.
class RamifiedCase : public ThueError {
public:
    using ThueError::ThueError;
};

class NotFoundWithinTruncation : public ThueError {
public:
    using ThueError::ThueError;
};

class CaseMismatch : public ThueError {
public:
    using ThueError::ThueError;
};

class AmbiguousArgmax : public ThueError {
public:
    using ThueError::ThueError;
};

// An identity that must hold by construction failed. Always a bug.
class IdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace thue
