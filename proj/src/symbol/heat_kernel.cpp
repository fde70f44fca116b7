#include <array>
#include <cmath>
#include <vector>

#include "weylres/errors.hpp"
#include "weylres/quadrature.hpp"
#include "weylres/symbol.hpp"

namespace weylres::symbol {
namespace {

constexpr double kTimeCut = 40.0;

}  // namespace

// F = int_0^inf (cosh t)^{-d} e^{t z} e^{-rho tanh t} dt, the resolvent as the
// Laplace transform of the heat-kernel symbol. Converges for Re(z) < d.
EvalResult eval_heat_kernel(const ProblemPoint& p) {
    validate(p);
    const double d = p.d;
    const Complex z = p.z;
    const double rho = p.rho;
    if (!(z.real() < d)) throw DomainError("heat-kernel representation requires Re(z) < d");

    auto integrand = [&](double t) {
        // (cosh t)^{-d} = (2 e^{-t} / (1 + e^{-2t}))^d
        const double log_sech = std::log(2.0) - t - std::log1p(std::exp(-2.0 * t));
        return std::exp(d * log_sech + t * z - rho * std::tanh(t));
    };
    std::vector<double> pts{0.0};
    if (rho > 30.0) pts.push_back(30.0 / rho);
    for (double t : {1.0, 4.0, 12.0, kTimeCut}) pts.push_back(t);
    quad::Options opt;
    opt.rel_tol = 1e-15;
    const quad::Result res = quad::integrate(integrand, std::span<const double>(pts), opt);
    if (!res.converged) throw NonConvergence("heat-kernel representation: quadrature");

    // t > T: 2^d e^{-rho} e^{-(d-z)t} (1 + (2 rho - d) e^{-2t} + ...)
    const Complex rate = d - z;
    const double lead = std::exp(d * std::log(2.0) - rho);
    const Complex tail = lead * (std::exp(-rate * kTimeCut) / rate +
                                 (2.0 * rho - d) * std::exp(-(rate + 2.0) * kTimeCut) / (rate + 2.0));
    const double k2 = 1.0 + 2.0 * rho + d;
    const double tail_err = lead * std::exp(-(rate.real() + 4.0) * kTimeCut) * k2 * k2;

    EvalResult r;
    r.value = res.value + tail;
    r.abs_error_estimate = res.abs_error + tail_err + 4.0 * kEps * res.abs_integral;
    r.method = Method::HeatKernel;
    return r;
}

}  // namespace weylres::symbol
