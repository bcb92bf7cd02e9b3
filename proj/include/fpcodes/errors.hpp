#pragma once

#include <stdexcept>
#include <string>

namespace fpcodes {

// Mismatched word lengths or out-of-range symbols.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Structurally valid input outside an operation's domain (empty set, bad t/T/g, non-prime modulus).
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration or size ceiling was exceeded; the message names the offending count.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fpcodes
