#ifndef GGPINT_ERRORS_HPP
#define GGPINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ggpint {

/// Base class for all errors raised by the engine. Carries a stable
/// machine-readable code (used by the CLI to pick exit codes).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Input malformed or violating a precondition (CLI exit 1).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A result could not be certified exactly at the working precision
/// (CLI exit 2).
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Internal consistency failure: an invariant the mathematics guarantees
/// did not hold (CLI exit 2).
class InternalError : public Error {
public:
    using Error::Error;
};

// -- finite algebra ---------------------------------------------------------
inline ValidationError non_monic_input(const std::string& w) { return {"NonMonicInput", w}; }
inline ValidationError zero_constant_term(const std::string& w) { return {"ZeroConstantTerm", w}; }

// -- p-adic linear algebra --------------------------------------------------
inline ValidationError zero_denominator(const std::string& w) { return {"ZeroDenominator", w}; }
inline ValidationError zero_argument(const std::string& w) { return {"ZeroArgument", w}; }
inline ValidationError not_symmetric(const std::string& w) { return {"NotSymmetric", w}; }
inline PrecisionError precision_exhausted(const std::string& w) { return {"PrecisionExhausted", w}; }
inline PrecisionError singular_at_precision(const std::string& w) { return {"SingularAtPrecision", w}; }

// -- instance model ---------------------------------------------------------
inline ValidationError not_minuscule(const std::string& w) { return {"NotMinuscule", w}; }
inline ValidationError g_does_not_stabilize(const std::string& w) { return {"GDoesNotStabilize", w}; }
inline ValidationError split_omega(const std::string& w) { return {"SplitOmega", w}; }
inline ValidationError odd_dimension(const std::string& w) { return {"OddDimension", w}; }
inline ValidationError shape_infeasible(const std::string& w) { return {"ShapeInfeasible", w}; }

// -- intersection formula ---------------------------------------------------
inline ValidationError not_self_reciprocal(const std::string& w) { return {"NotSelfReciprocal", w}; }

// -- oracle suite ------------------------------------------------------------
inline InternalError not_cyclic(const std::string& w) { return {"NotCyclic", w}; }
inline ValidationError reducible_char_poly(const std::string& w) { return {"ReducibleCharPoly", w}; }
inline InternalError pairing_degenerate(const std::string& w) { return {"PairingDegenerate", w}; }
inline InternalError not_stabilized(const std::string& w) { return {"NotStabilized", w}; }
inline ValidationError infeasible_shape(const std::string& w) { return {"InfeasibleShape", w}; }

}  // namespace ggpint

#endif
