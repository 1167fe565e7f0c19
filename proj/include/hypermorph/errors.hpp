#pragma once

#include <stdexcept>
#include <string>

namespace hypermorph {

/// Raised when a membership set, image or subhypergraph does not match the
/// dimensions of the structure it is applied to.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operator result breaks an invariant the algebra guarantees.
/// This always indicates a bug in the library, never bad user input.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace hypermorph
