#include <algorithm>
#include <cmath>

#include "semi_infinite.hpp"
#include "weylres/errors.hpp"
#include "weylres/quadrature.hpp"
#include "weylres/specfun.hpp"
#include "weylres/symbol.hpp"

namespace weylres::symbol {

// F = 2^{d-1} Gamma(a) / (d-1)! e^{-rho} [ M(a,d;2rho) int_rho^inf eta^{d-1} e^{-eta} U(a,d;2eta)
//                                        + U(a,d;2rho) int_0^rho eta^{d-1} e^{-eta} M(a,d;2eta) ]
// M grows like e^{2 eta}; with S(x) = e^{-x} M(a,d;x) both products are
// formed from bounded factors:
//   S(2rho) int_rho^inf eta^{d-1} e^{rho-eta} U(2eta) + U(2rho) int_0^rho eta^{d-1} e^{eta-rho} S(2eta).
EvalResult eval_confluent(const ProblemPoint& p) {
    validate(p);
    if (!(p.rho > 0.0)) throw DomainError("confluent representation requires rho > 0");
    const int d = p.d;
    const double rho = p.rho;
    const specfun::ConfluentParams cp{p.a(), d};

    double u_rel = 0.0;
    auto outer_integrand = [&](double eta) {
        const specfun::Estimate u = specfun::tricomi_u_estimate(cp, 2.0 * eta);
        if (u.value != Complex(0.0)) u_rel = std::max(u_rel, u.abs_error / std::abs(u.value));
        return std::pow(eta, d - 1) * std::exp(rho - eta) * u.value;
    };
    double m_rel = 0.0;
    auto inner_integrand = [&](double eta) {
        const specfun::Estimate m = specfun::kummer_m_scaled_estimate(cp, 2.0 * eta);
        if (m.value != Complex(0.0)) m_rel = std::max(m_rel, m.abs_error / std::abs(m.value));
        return std::pow(eta, d - 1) * std::exp(eta - rho) * m.value;
    };

    const quad::Result outer = detail::integrate_to_infinity(outer_integrand, rho, 1e-13);
    std::vector<double> pts{0.0};
    for (double t = 10.0; t < rho; t += 10.0) pts.push_back(t);
    pts.push_back(rho);
    quad::Options opt;
    opt.rel_tol = 1e-13;
    const quad::Result inner = quad::integrate(inner_integrand, std::span<const double>(pts), opt);
    if (!outer.converged || !inner.converged) throw NonConvergence("confluent representation: quadrature");

    const specfun::Estimate m_rho = specfun::kummer_m_scaled_estimate(cp, 2.0 * rho);
    const specfun::Estimate u_rho = specfun::tricomi_u_estimate(cp, 2.0 * rho);
    const Complex pref = std::pow(2.0, d - 1) * specfun::gamma(cp.a) / std::tgamma(static_cast<double>(d));

    const Complex part_m = m_rho.value * outer.value;
    const Complex part_u = u_rho.value * inner.value;
    const double err_m = m_rho.abs_error * std::abs(outer.value) +
                         std::abs(m_rho.value) * (outer.abs_error + u_rel * outer.abs_integral);
    const double err_u = u_rho.abs_error * std::abs(inner.value) +
                         std::abs(u_rho.value) * (inner.abs_error + m_rel * inner.abs_integral);

    EvalResult r;
    r.value = pref * (part_m + part_u);
    r.abs_error_estimate = std::abs(pref) * (err_m + err_u) +
                           8.0 * kEps * std::abs(pref) * (std::abs(part_m) + std::abs(part_u));
    r.method = Method::Confluent;
    // Beyond Re(z) < d the representation is evaluated through the analytic
    // continuation of U in a; agreement there is observed, not guaranteed.
    r.in_validity_domain = p.z.real() < d;
    return r;
}

}  // namespace weylres::symbol
