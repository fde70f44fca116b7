#include <cmath>

#include "weylres/errors.hpp"
#include "weylres/specfun.hpp"

namespace weylres::specfun {

// I_m(x) = (x/2)^m e^{-x} / Gamma(1+m) M(m + 1/2, 2m + 1; 2x)
Estimate bessel_i_estimate(BesselOrder m, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_i: x must be positive");
    if (m.twice_m < 0) throw DomainError("bessel_i: negative order");
    const double order = m.value();
    const Estimate mm = kummer_m_estimate({Complex(order + 0.5), m.twice_m + 1}, Complex(2.0 * x));
    const double pref = std::exp(order * std::log(0.5 * x) - x - std::lgamma(1.0 + order));
    return {pref * mm.value, pref * mm.abs_error + 4.0 * kEps * std::abs(pref * mm.value)};
}

// K_m(x) = sqrt(pi) (2x)^m e^{-x} U(m + 1/2, 2m + 1; 2x)
Estimate bessel_k_estimate(BesselOrder m, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k: x must be positive");
    if (m.twice_m < 0) throw DomainError("bessel_k: negative order");
    const double order = m.value();
    const Estimate u = tricomi_u_estimate({Complex(order + 0.5), m.twice_m + 1}, 2.0 * x);
    const double pref = std::sqrt(kPi) * std::exp(order * std::log(2.0 * x) - x);
    return {pref * u.value, pref * u.abs_error + 4.0 * kEps * std::abs(pref * u.value)};
}

double bessel_i(BesselOrder m, double x) { return bessel_i_estimate(m, x).value.real(); }
double bessel_k(BesselOrder m, double x) { return bessel_k_estimate(m, x).value.real(); }

}  // namespace weylres::specfun
