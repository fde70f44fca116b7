#pragma once

#include <cmath>
#include <vector>

#include "weylres/errors.hpp"
#include "weylres/quadrature.hpp"

namespace weylres::symbol::detail {

/// int_{x0}^inf f(x) dx for integrands with at least e^{-x} decay (up to
/// powers). Breakpoints are geometric below 1, then widen; the range
/// is extended until the integrand falls below 1e-18 of the running value.
template <class F>
quad::Result integrate_to_infinity(F& f, double x0, double rel_tol = 1e-15) {
    std::vector<double> pts{x0};
    double x = x0;
    if (x0 > 0.0 && x0 < 1.0) {
        while (2.0 * x < 1.0) {
            x *= 2.0;
            pts.push_back(x);
        }
        x = 1.0;
        pts.push_back(x);
    }
    // Widths grow with the e^{-x} decay: a 21-point rule is exact to rounding
    // for e^{-x} times a smooth factor on panels of width ~10.
    for (double step : {1.0, 3.0, 7.0, 15.0, 27.0, 40.0}) pts.push_back(x + step);
    double end = x + 40.0;

    quad::Options opt;
    opt.rel_tol = rel_tol;
    quad::Result total = quad::integrate(f, std::span<const double>(pts), opt);
    while (std::abs(f(end)) * 4.0 > 1e-18 * std::abs(total.value)) {
        if (end > x0 + 5000.0) throw NonConvergence("semi-infinite integral: integrand does not decay");
        std::vector<double> more;
        for (double t = end; t < end + 20.0; t += 10.0) more.push_back(t);
        more.push_back(end + 20.0);
        opt.abs_tol = 1e-17 * std::abs(total.value);
        const quad::Result extra = quad::integrate(f, std::span<const double>(more), opt);
        total.value += extra.value;
        total.abs_error += extra.abs_error;
        total.abs_integral += extra.abs_integral;
        total.evaluations += extra.evaluations;
        total.converged = total.converged && extra.converged;
        end += 20.0;
    }
    return total;
}

}  // namespace weylres::symbol::detail
