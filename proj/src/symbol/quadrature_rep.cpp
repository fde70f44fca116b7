#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "weylres/errors.hpp"
#include "weylres/quadrature.hpp"
#include "weylres/symbol.hpp"

namespace weylres::symbol {
namespace {

// Upper cut of the v-integral; the remainder beyond it is added in closed form.
constexpr double kTailCut = 40.0;

Complex power_sign(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

// F^{(n)}(rho) = int_0^1 g(s) (-s)^n e^{-s rho} ds.
// [0, 1/2] is integrated in s; on [1/2, 1] the substitution 1 - s = e^{-v}
// turns the endpoint factor (1-s)^{a-1} ds into the smooth e^{-a v} dv for
// every Re(a) > 0.
EvalResult eval_quadrature(const ProblemPoint& p, int n) {
    validate(p);
    if (n < 0) throw DomainError("derivative order must be nonnegative");
    const Complex a = p.a();
    const Complex b = p.b();
    if (!(a.real() > 0.0)) throw DomainError("quadrature representation requires Re(z) < d");
    const double rho = p.rho;

    auto near_zero = [&](double s) {
        Complex v = std::exp((a - 1.0) * std::log1p(-s) + (b - 1.0) * std::log1p(s) - s * rho);
        if (n > 0) v *= std::pow(-s, n);
        return v;
    };
    std::vector<double> pts{0.0};
    if (rho > 0.0) {
        for (double s : {static_cast<double>(n) / rho, (n + 30.0) / rho}) {
            if (s > pts.back() * 1.01 && s < 0.49) pts.push_back(s);
        }
    }
    pts.push_back(0.5);

    quad::Options opt;
    opt.rel_tol = 1e-15;
    const quad::Result left = quad::integrate(near_zero, std::span<const double>(pts), opt);

    auto near_one = [&](double v) {
        const double e = std::exp(-v);
        Complex w = std::exp(-a * v + (b - 1.0) * std::log(2.0 - e) - rho * (1.0 - e));
        if (n > 0) w *= std::pow(-(1.0 - e), n);
        return w;
    };
    quad::Options opt_right;
    opt_right.rel_tol = 1e-15;
    opt_right.abs_tol = 1e-17 * std::abs(left.value);
    const std::array<double, 4> vpts{std::log(2.0), 4.0, 12.0, kTailCut};
    const quad::Result right = quad::integrate(near_one, std::span<const double>(vpts), opt_right);

    // Beyond v = V: g ~ 2^{b-1} e^{-rho} e^{-a v} (1 + (rho - n - (b-1)/2) e^{-v} + ...).
    const Complex lead = std::exp((b - 1.0) * std::log(2.0) - rho) * power_sign(n);
    const Complex tail = lead * (std::exp(-a * kTailCut) / a +
                                 (rho - n - 0.5 * (b - 1.0)) * std::exp(-(a + 1.0) * kTailCut) / (a + 1.0));
    const double k2 = 1.0 + rho + n + std::abs(b);
    const double tail_err = std::abs(lead) * std::exp(-(a.real() + 2.0) * kTailCut) * k2 * k2;

    EvalResult r;
    r.value = left.value + right.value + tail;
    r.abs_error_estimate = left.abs_error + right.abs_error + tail_err +
                           4.0 * kEps * (left.abs_integral + right.abs_integral);
    if (!left.converged || !right.converged) {
        throw NonConvergence("quadrature representation: refinement budget exhausted");
    }
    r.method = Method::Quadrature;
    r.in_validity_domain = true;
    return r;
}

}  // namespace weylres::symbol
