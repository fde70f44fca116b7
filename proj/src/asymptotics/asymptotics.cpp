#include "weylres/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weylres/errors.hpp"
#include "weylres/specfun.hpp"

namespace weylres::asymptotics {
namespace {

// Taylor coefficients g_0 .. g_{count-1} of g at s = 0 from g' = g (log g)',
// (log g)' = -(a-1)/(1-s) + (b-1)/(1+s) = sum_k [-(a-1) + (b-1)(-1)^k] s^k.
std::vector<Complex> taylor_of_g(Complex a, Complex b, int count) {
    std::vector<Complex> h(count), g(count);
    for (int k = 0; k < count; ++k) h[k] = -(a - 1.0) + (b - 1.0) * ((k % 2 == 0) ? 1.0 : -1.0);
    g[0] = 1.0;
    for (int k = 0; k + 1 < count; ++k) {
        Complex acc = 0.0;
        for (int i = 0; i <= k; ++i) acc += h[i] * g[k - i];
        g[k + 1] = acc / static_cast<double>(k + 1);
    }
    return g;
}

bool is_nonnegative_integer(Complex w) {
    return w.imag() == 0.0 && w.real() >= 0.0 && w.real() == std::round(w.real());
}

}  // namespace

AsymptoticExpansion asymptotic_coeffs(int d, Complex z, int n) {
    if (n < 1 || n > kMaxTerms + 2) throw DomainError("asymptotic_coeffs: n must lie in [1, 20]");
    if (d < 1) throw DomainError("dimension must be a positive integer");
    const Complex a = 0.5 * (static_cast<double>(d) - z);
    const Complex b = 0.5 * (static_cast<double>(d) + z);
    const std::vector<Complex> g = taylor_of_g(a, b, n);
    AsymptoticExpansion out;
    out.d = d;
    out.z = z;
    double fact = 1.0;
    for (int j = 0; j < n; ++j) {
        if (j > 0) fact *= j;
        out.d_coeffs.push_back(fact * g[j]);
    }
    out.d_coeffs[0] = 1.0;
    return out;
}

EvalResult eval_asymptotic(const ProblemPoint& p, int n) {
    validate(p);
    if (n < 1 || n > kMaxTerms) throw DomainError("eval_asymptotic: n must lie in [1, 20]");
    if (!(p.rho > 0.0)) throw DomainError("asymptotic expansion requires rho > 0");
    const double rho = p.rho;
    const Complex a = p.a();
    const Complex b = p.b();
    const AsymptoticExpansion ex = asymptotic_coeffs(p.d, p.z, n + 2);

    // t_j = d_j / rho^j, j = 1 .. n+2 (index j-1).
    std::vector<Complex> t(n + 2);
    double power = 1.0;
    for (int j = 0; j < n + 2; ++j) {
        power /= rho;
        t[j] = ex.d_coeffs[j] * power;
    }

    // Exponentially small contribution of the endpoint s = 1.
    double endpoint = 0.0;
    try {
        endpoint = 2.0 * std::abs(std::exp((b - 1.0) * std::log(2.0)) * specfun::gamma(a)) * std::exp(-rho) *
                   std::pow(rho, -a.real());
    } catch (const PoleError&) {
        endpoint = 0.0;
    }

    // g is a polynomial of degree d-2 when a-1 and b-1 are nonnegative
    // integers; the expansion then terminates.
    const bool finite = is_nonnegative_integer(a - 1.0) && is_nonnegative_integer(b - 1.0);
    int used = n;
    double truncation = 0.0;
    if (finite) {
        used = std::min(n, std::max(1, p.d - 1));
        for (int j = used; j < n + 2; ++j) truncation = std::max(truncation, std::abs(t[j]));
    } else {
        if (n >= 2 && std::abs(t[1]) > std::abs(t[0])) {
            throw DivergentRegime("asymptotic terms grow from the first one (|z| > rho)");
        }
        // Truncate after J terms where max(|t_{J+1}|, |t_{J+2}|) is smallest.
        double best = std::numeric_limits<double>::infinity();
        for (int J = 1; J <= n; ++J) {
            const double env = std::max(std::abs(t[J]), std::abs(t[J + 1]));
            if (env < best) {
                best = env;
                used = J;
            }
        }
        truncation = best;
        if (used == n) {
            const double q = std::abs(t[n + 1]) / std::abs(t[n]);
            if (std::abs(t[n]) > 0.0 && q < 1.0) truncation /= (1.0 - q);
        }
    }

    CompensatedSum<Complex> sum;
    double magnitude = 0.0;
    for (int j = 0; j < used; ++j) {
        sum.add(t[j]);
        magnitude += std::abs(t[j]);
    }
    EvalResult r;
    r.value = sum.value();
    r.abs_error_estimate = truncation + endpoint + 4.0 * kEps * magnitude;
    r.method = Method::Asymptotic;
    r.in_validity_domain = r.abs_error_estimate <= 1e-6 * std::abs(r.value);
    return r;
}

EvalResult derivative(const ProblemPoint& p, int n) {
    if (n < 0) throw DomainError("derivative order must be nonnegative");
    if (n == 0) return symbol::eval(p);
    validate(p);
    if (p.z.real() < p.d) return symbol::eval_quadrature(p, n);
    return symbol::eval_series(p, symbol::kSeriesBudget, n);
}

BoundCheck check_bounds(int d, Complex z, int n, double s, double rho) {
    if (z.real() > 0.0) throw DomainError("derivative bounds assume Re(z) <= 0");
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("interpolation exponent s must lie in [0, 1]");
    if (!(rho > 0.0)) throw DomainError("derivative bounds need rho > 0");
    if (n < 0) throw DomainError("derivative order must be nonnegative");
    BoundCheck bc;
    bc.n = n;
    bc.s = s;
    bc.rho = rho;
    bc.lhs = std::abs(derivative(ProblemPoint{d, z, rho}, n).value);
    const double log_rhs_common = s * std::lgamma(n + 1.0) - s * (n + 1.0) * std::log(rho);
    const double np1 = n + 1.0;
    if (d >= 2) {
        bc.rhs = std::exp(log_rhs_common + (s - 1.0) * std::log(np1));
        bc.passed = bc.lhs <= bc.rhs * (1.0 + 1e-12);
    } else {
        bc.rhs = std::exp(log_rhs_common + (0.5 * s - 0.5) * std::log(np1));
        bc.passed = std::isfinite(bc.lhs / bc.rhs);
    }
    bc.ratio = bc.lhs / bc.rhs;
    return bc;
}

}  // namespace weylres::asymptotics
