#pragma once

// Large-rho expansion F ~ sum_j d_j / rho^j (Watson's lemma), rho-derivatives
// of F and the derivative bounds
//   |F^{(n)}(rho)| <= (n!)^s (n+1)^{s-1} rho^{-s(n+1)},            d >= 2,
//   |F^{(n)}(rho)| <= C (n!)^s (n+1)^{s/2-1/2} rho^{-s(n+1)},      d = 1,
// for Re(z) <= 0 and 0 <= s <= 1.

#include <vector>

#include "weylres/symbol.hpp"

namespace weylres {

struct AsymptoticExpansion {
    /// d_1 .. d_n; d_{j+1} = g^{(j)}(0) with g(s) = (1-s)^{a-1} (1+s)^{b-1}.
    std::vector<Complex> d_coeffs;
    int d = 1;
    Complex z{};
};

struct BoundCheck {
    int n = 0;
    double s = 0.0;
    double rho = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool passed = false;
    /// lhs / rhs. For d = 1 the right side omits the unknown constant C and
    /// this ratio is the empirical value of C at the sample.
    double ratio = 0.0;
};

namespace asymptotics {

inline constexpr int kMaxTerms = 20;

AsymptoticExpansion asymptotic_coeffs(int d, Complex z, int n);

/// Optimally truncated asymptotic sum using at most n terms d_1 .. d_n.
EvalResult eval_asymptotic(const ProblemPoint& p, int n = kMaxTerms);

/// d^n F / d rho^n. n = 0 is eval(p); otherwise quadrature for Re(z) < d and
/// the termwise differentiated series elsewhere.
EvalResult derivative(const ProblemPoint& p, int n);

BoundCheck check_bounds(int d, Complex z, int n, double s, double rho);

}  // namespace asymptotics

using asymptotics::eval_asymptotic;

}  // namespace weylres
