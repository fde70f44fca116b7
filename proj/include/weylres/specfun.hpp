#pragma once

// Special functions used by the symbol representations: complex Gamma,
// generalized Laguerre polynomials, Kummer M, Tricomi U, modified Bessel
// I_m / K_m for half-integer m, and 2F1 at argument -1.
//
// All functions are pure and reentrant.

#include "weylres/types.hpp"

namespace weylres::specfun {

/// Parameters (a, c) of the confluent equation x y'' + (c - x) y' - a y = 0.
/// Only positive integer c is needed.
struct ConfluentParams {
    Complex a;
    int c;
};

/// Half-integer order m >= 0 stored as 2m.
struct BesselOrder {
    int twice_m;

    static BesselOrder for_dimension(int d) { return BesselOrder{d - 1}; }
    double value() const noexcept { return 0.5 * twice_m; }
};

/// A value together with an estimate of its absolute error.
struct Estimate {
    Complex value;
    double abs_error;
};

Complex gamma(Complex s);
double gamma(double s);
/// Principal-branch-free log|Gamma| plus argument; exp(lgamma) == gamma.
Complex lgamma(Complex s);

/// Generalized Laguerre polynomial by the three-term recurrence.
double laguerre(int n, double alpha, double x);

Complex kummer_m(const ConfluentParams& p, Complex x);
Estimate kummer_m_estimate(const ConfluentParams& p, Complex x);
/// e^{-x} M(a, c; x) for real x >= 0, free of overflow for large x.
Estimate kummer_m_scaled_estimate(const ConfluentParams& p, double x);

Complex tricomi_u(const ConfluentParams& p, double x);
Estimate tricomi_u_estimate(const ConfluentParams& p, double x);

double bessel_i(BesselOrder m, double x);
double bessel_k(BesselOrder m, double x);
Estimate bessel_i_estimate(BesselOrder m, double x);
Estimate bessel_k_estimate(BesselOrder m, double x);

/// 2F1(a, b; c; -1) through the Pfaff transformation to argument 1/2.
Complex gauss_2f1_minus1(Complex a, Complex b, Complex c);
Estimate gauss_2f1_minus1_estimate(Complex a, Complex b, Complex c);

/// 2F1(a, b; c; 1/2) by its (geometrically convergent) defining series.
Estimate gauss_2f1_half(Complex a, Complex b, Complex c);

}  // namespace weylres::specfun
