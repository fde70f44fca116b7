#pragma once

#include <stdexcept>
#include <string>

namespace weylres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (x <= 0 for U, odd d for the
/// elementary formula, Re(z) >= d for the integral representation, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation at a pole. For Gamma at s = -n the residue (-1)^n / n! is
/// carried along so callers can form residue limits without re-deriving it.
class PoleError : public Error {
public:
    PoleError(const std::string& what, int pole_index = 0, double residue = 0.0)
        : Error(what), pole_index_(pole_index), residue_(residue) {}

    int pole_index() const noexcept { return pole_index_; }
    double residue() const noexcept { return residue_; }
    int residue_sign() const noexcept { return residue_ < 0 ? -1 : (residue_ > 0 ? 1 : 0); }

private:
    int pole_index_;
    double residue_;
};

/// A series, recurrence or quadrature did not reach its error target within
/// its budget.
class NonConvergence : public Error {
public:
    using Error::Error;
};

/// The dispatcher found no representation whose preconditions hold.
class NoValidMethod : public Error {
public:
    using Error::Error;
};

/// Asymptotic series whose terms grow from the first one.
class DivergentRegime : public Error {
public:
    using Error::Error;
};

/// A radial symbol does not decay as declared.
class DecayViolation : public Error {
public:
    using Error::Error;
};

}  // namespace weylres
