#pragma once

#include <stdexcept>
#include <string>

namespace specnum {

// Division by a series whose constant term is not a unit of the
// coefficient ring.
struct NonUnitDivisor : std::domain_error {
    explicit NonUnitDivisor(const std::string& what) : std::domain_error(what) {}
};

// Square root requested of a series whose constant term is not 1.
struct BadConstantTerm : std::domain_error {
    explicit BadConstantTerm(const std::string& what) : std::domain_error(what) {}
};

// Composition with an inner series whose constant term is nonzero.
struct NonzeroInnerConstant : std::domain_error {
    explicit NonzeroInnerConstant(const std::string& what) : std::domain_error(what) {}
};

// Embedding of a rational whose denominator is divisible by p.
struct DenominatorNotUnit : std::domain_error {
    explicit DenominatorNotUnit(const std::string& what) : std::domain_error(what) {}
};

// The assembled numerator of C(x/2, n) failed to absorb the p-part of n!.
// C(x/2, n) is p-adically integral, so this can only signal a bug.
struct FactorialNotCancelled : std::logic_error {
    explicit FactorialNotCancelled(const std::string& what) : std::logic_error(what) {}
};

struct UnknownIdentity : std::invalid_argument {
    explicit UnknownIdentity(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroLambda : std::invalid_argument {
    explicit ZeroLambda(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace specnum
