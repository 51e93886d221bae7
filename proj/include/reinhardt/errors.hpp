#pragma once

#include <stdexcept>
#include <string>

namespace reinhardt {

// Every failure the library raises deliberately derives from Error, so
// callers can distinguish "the math rejected your input" from a genuine bug
// (plain std::logic_error / assert).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic on two irrational values from different quadratic fields.
// Nothing in this library ever mixes sqrt(d1) with sqrt(d2); such a request
// is always an input error, never something to coerce.
struct MixedFieldError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// A value required to be a quadratic irrational turned out rational.
struct RationalValueError : Error {
    using Error::Error;
};

// Pell input D was a perfect square (the equation has no nontrivial solution).
struct SquareInputError : Error {
    using Error::Error;
};

// A Pell solution fed to a consumer that belongs to a different D.
struct IncompatiblePellError : Error {
    using Error::Error;
};

// A constructed object failed its own defining identity (determinant,
// eigenvalue equation, positivity, ...).  Indicates inconsistent inputs.
struct ConstraintViolationError : Error {
    using Error::Error;
};

// Domain description rejected by validate(); message lists every issue.
struct ValidationError : Error {
    using Error::Error;
};

// A monomial map does not act on the axes of this particular domain
// (an included axis would be torn or collapsed).
struct AxisAmbiguityError : Error {
    using Error::Error;
};

// reduce_strip on a description that is not a strip.
struct NotAStripError : Error {
    using Error::Error;
};

// An operation defined only for non-hyperbolic inputs met a hyperbolic one.
struct HyperbolicInputError : Error {
    using Error::Error;
};

// Closed-form iteration of an orientation-reversing shear is not defined.
struct FlipIterateError : Error {
    using Error::Error;
};

// Automorphism group requested for a shape outside the classified families.
struct UnclassifiedError : Error {
    using Error::Error;
};

// Continued-fraction expansion exceeded the caller's term budget.
struct MaxTermsError : Error {
    using Error::Error;
};

// Evaluation point lies outside the (log image of the) domain.
struct OutsideDomainError : Error {
    using Error::Error;
};

// Malformed textual input (CLI arguments, JSON domain files).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace reinhardt
