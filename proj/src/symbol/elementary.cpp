#include <cmath>

#include "weylres/errors.hpp"
#include "weylres/symbol.hpp"

namespace weylres::symbol {

double incomplete_exp_integral(int n, double rho) {
    if (n < 0) throw DomainError("incomplete_exp_integral: n must be nonnegative");
    if (rho <= 0.0) return 0.0;
    if (rho < n + 1.0) {
        // n! e^{-rho} sum_{l > n} rho^l / l!  -- all terms positive
        double term = std::pow(rho, n + 1) / (n + 1.0);
        double sum = 0.0;
        for (int l = n + 1; l < n + 2000; ++l) {
            sum += term;
            term *= rho / (l + 1.0);
            if (term <= 1e-18 * sum) break;
        }
        return std::exp(-rho) * sum;
    }
    // n! (1 - e^{-rho} p_n(rho)), e^{-rho} p_n(rho) <= 1/2 here
    double partial = 1.0;
    double term = 1.0;
    for (int l = 1; l <= n; ++l) {
        term *= rho / l;
        partial += term;
    }
    return std::tgamma(n + 1.0) * (1.0 - std::exp(-rho) * partial);
}

// F_{2p,0}(rho) = sum_{k<p} C(p-1,k) (-1)^k rho^{-2k-1} int_0^rho v^{2k} e^{-v} dv
EvalResult eval_elementary_even(int d, double rho) {
    if (d < 2 || d % 2 != 0) throw DomainError("elementary representation requires even d");
    if (!std::isfinite(rho) || !(rho > 0.0)) throw DomainError("elementary representation requires rho > 0");
    const int p = d / 2;
    double binom = 1.0;
    double sum = 0.0;
    double magnitude = 0.0;
    for (int k = 0; k < p; ++k) {
        if (k > 0) binom *= static_cast<double>(p - k) / k;
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        const double term = sign * binom * std::pow(rho, -2.0 * k - 1.0) * incomplete_exp_integral(2 * k, rho);
        sum += term;
        magnitude += std::abs(term);
    }
    EvalResult r;
    r.value = sum;
    r.abs_error_estimate = 16.0 * kEps * magnitude;
    r.method = Method::ElementaryEven;
    r.precision_loss = rho < d;
    return r;
}

}  // namespace weylres::symbol
