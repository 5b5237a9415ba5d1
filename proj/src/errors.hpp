#pragma once

#include <stdexcept>
#include <string>

namespace ghopf {

// Malformed input text/JSON.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contract violation on an operation argument.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operands carry different basis tags (or different arities).
struct BasisMismatch : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

// An element expected to lie in the unlabeled subalgebra has an orbit with
// non-constant coefficients.
struct NotInSpan : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A quotient operation received an element supported inside the ideal.
struct IdealSupport : InvalidArgument {
    using InvalidArgument::InvalidArgument;
};

}  // namespace ghopf
