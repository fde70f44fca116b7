#include <algorithm>
#include <cmath>

#include "semi_infinite.hpp"
#include "weylres/errors.hpp"
#include "weylres/quadrature.hpp"
#include "weylres/specfun.hpp"
#include "weylres/symbol.hpp"

namespace weylres::symbol {

// F_{d,0}(rho) = rho^{-m} [ K_m(rho) int_0^rho eta^m I_m(eta) deta
//                         + I_m(rho) int_rho^inf eta^m K_m(eta) deta ],  m = (d-1)/2.
EvalResult eval_bessel_inverse(int d, double rho) {
    validate(ProblemPoint{d, Complex(0.0), rho});
    if (!(rho > 0.0)) throw DomainError("Bessel representation requires rho > 0");
    const specfun::BesselOrder m = specfun::BesselOrder::for_dimension(d);
    const double order = m.value();

    double i_rel = 0.0;
    auto inner_integrand = [&](double eta) {
        const specfun::Estimate v = specfun::bessel_i_estimate(m, eta);
        if (v.value != Complex(0.0)) i_rel = std::max(i_rel, v.abs_error / std::abs(v.value));
        return std::pow(eta, order) * v.value;
    };
    double k_rel = 0.0;
    auto outer_integrand = [&](double eta) {
        const specfun::Estimate v = specfun::bessel_k_estimate(m, eta);
        if (v.value != Complex(0.0)) k_rel = std::max(k_rel, v.abs_error / std::abs(v.value));
        return std::pow(eta, order) * v.value;
    };

    std::vector<double> pts{0.0};
    for (double t = 10.0; t < rho; t += 10.0) pts.push_back(t);
    pts.push_back(rho);
    quad::Options opt;
    opt.rel_tol = 1e-14;
    const quad::Result inner = quad::integrate(inner_integrand, std::span<const double>(pts), opt);
    const quad::Result outer = detail::integrate_to_infinity(outer_integrand, rho, 1e-14);
    if (!inner.converged || !outer.converged) throw NonConvergence("Bessel representation: quadrature");

    const specfun::Estimate i_rho = specfun::bessel_i_estimate(m, rho);
    const specfun::Estimate k_rho = specfun::bessel_k_estimate(m, rho);
    const double scale = std::pow(rho, -order);

    const Complex part_k = k_rho.value * inner.value;
    const Complex part_i = i_rho.value * outer.value;
    const double err = k_rho.abs_error * std::abs(inner.value) +
                       std::abs(k_rho.value) * (inner.abs_error + i_rel * inner.abs_integral) +
                       i_rho.abs_error * std::abs(outer.value) +
                       std::abs(i_rho.value) * (outer.abs_error + k_rel * outer.abs_integral);

    EvalResult r;
    r.value = scale * (part_k + part_i);
    r.abs_error_estimate = scale * err + 8.0 * kEps * scale * (std::abs(part_k) + std::abs(part_i));
    r.method = Method::BesselInverse;
    return r;
}

}  // namespace weylres::symbol
