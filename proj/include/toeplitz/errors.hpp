#pragma once

#include <stdexcept>
#include <string>

namespace toeplitz {

// Malformed input: bad characters, wrong generator length, bad modulus.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Index or length arithmetic left the 64-bit unsigned range.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Mathematically undefined request, e.g. index 0 or q not dividing any m^s.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace toeplitz
