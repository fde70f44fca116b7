#include <algorithm>
#include <cmath>
#include <vector>

#include "weylres/errors.hpp"
#include "weylres/specfun.hpp"
#include "weylres/symbol.hpp"

namespace weylres::symbol {
namespace {

using specfun::Estimate;

// c_j = (-1)^j j! / (a)_{j+1} * 2^{b-1} * 2F1(1-b, a; j+1+a; 1/2).
// The hypergeometric factor is the Pfaff image of 2F1(1-b, j+1; j+1+a; -1).
Estimate hyper_factor(Complex a, Complex b, int j) {
    return specfun::gauss_2f1_half(1.0 - b, a, a + static_cast<double>(j + 1));
}

// Bound on |c_j| for all j when Re(a) > 0: |c_j| <= int_0^1 |g(s)| ds.
double moment_bound(Complex a, Complex b) {
    const double ar = a.real();
    const double br = b.real();
    const Estimate h = specfun::gauss_2f1_half(Complex(1.0 - br), Complex(ar), Complex(ar + 1.0));
    return std::pow(2.0, br - 1.0) / ar * (std::abs(h.value) + h.abs_error);
}

// Envelope |c_j| <= C j^gamma fitted to the last computed coefficients; used
// when Re(a) <= 0 and the integral bound is unavailable.
struct Envelope {
    double scale = 0.0;
    double growth = 0.0;

    double at(int j) const { return scale * std::pow(std::max(1, j), growth); }
};

Envelope fit_envelope(const std::vector<double>& mags, int first_index, Complex a) {
    Envelope env;
    env.growth = std::max(0.0, -a.real()) + 1.0;
    const int count = static_cast<int>(mags.size());
    for (int i = std::max(0, count - 8); i < count; ++i) {
        const int j = first_index + i;
        env.scale = std::max(env.scale, 2.0 * mags[i] / std::pow(std::max(1, j), env.growth));
    }
    return env;
}

// sum_{k > K} coeff(k + n) rho^k / k!, given |coeff(j)| <= bound(j).
template <class Bound>
double tail_sum(const Bound& bound, int K, int n, double rho) {
    if (rho == 0.0) return 0.0;
    double log_term = 0.0;
    for (int k = 1; k <= K + 1; ++k) log_term += std::log(rho / k);
    double total = 0.0;
    for (int k = K + 1; k < K + 100000; ++k) {
        if (k > K + 1) log_term += std::log(rho / k);
        const double t = bound(k + n) * std::exp(log_term);
        total += t;
        if (k > rho && t <= 1e-20 * total) break;
        if (!std::isfinite(total)) break;
    }
    return total;
}

}  // namespace

Estimate coeff_ck_estimate(int d, Complex z, int k) {
    validate(ProblemPoint{d, z, 0.0});
    if (k < 0) throw DomainError("coefficient index must be nonnegative");
    const Complex a = 0.5 * (static_cast<double>(d) - z);
    const Complex b = 0.5 * (static_cast<double>(d) + z);
    // (-1)^k k! / (a)_{k+1} = Gamma(k+1) Gamma(a) / Gamma(k+1+a) with sign
    Complex ratio = 1.0 / a;
    for (int j = 1; j <= k; ++j) ratio *= -static_cast<double>(j) / (a + static_cast<double>(j));
    const Complex pref = std::exp((b - 1.0) * std::log(2.0));
    const Estimate h = hyper_factor(a, b, k);
    const Complex value = ratio * pref * h.value;
    const double err = std::abs(ratio * pref) * h.abs_error + kEps * (4.0 * k + 8.0) * std::abs(value);
    return {value, err};
}

Complex coeff_ck(int d, Complex z, int k) { return coeff_ck_estimate(d, z, k).value; }

SeriesExpansion series_expansion(int d, Complex z, int K) {
    if (K < 0) throw DomainError("truncation order must be nonnegative");
    SeriesExpansion out;
    out.d = d;
    out.z = z;
    out.truncation_K = K;
    std::vector<double> mags;
    for (int k = 0; k <= K; ++k) {
        out.coefficients.push_back(coeff_ck(d, z, k));
        mags.push_back(std::abs(out.coefficients.back()));
    }
    const Complex a = 0.5 * (static_cast<double>(d) - z);
    const Complex b = 0.5 * (static_cast<double>(d) + z);
    if (a.real() > 0.0) {
        out.tail_bound = moment_bound(a, b);
    } else {
        const Envelope env = fit_envelope(mags, 0, a);
        out.tail_bound = env.at(K + 1);
    }
    return out;
}

EvalResult eval_series(const ProblemPoint& p, int max_terms, int n) {
    validate(p);
    if (n < 0) throw DomainError("derivative order must be nonnegative");
    if (max_terms < 1) throw DomainError("series needs at least one term");
    const Complex a = p.a();
    const Complex b = p.b();
    const double rho = p.rho;
    const Complex pref = std::exp((b - 1.0) * std::log(2.0));

    // q_k = (-1)^{k+n} (k+n)! rho^k / (k! (a)_{k+n+1})
    Complex q = 1.0 / a;
    for (int j = 1; j <= n; ++j) q *= -static_cast<double>(j) / (a + static_cast<double>(j));

    const bool bounded = a.real() > 0.0;
    const double mbound = bounded ? moment_bound(a, b) : 0.0;

    CompensatedSum<Complex> sum;
    double rounding = 0.0;
    std::vector<double> mags;
    double tail = 0.0;
    int k = 0;
    for (;; ++k) {
        if (k > 0) {
            if (rho == 0.0) break;
            q *= -rho * static_cast<double>(k + n) / (static_cast<double>(k) * (a + static_cast<double>(k + n)));
        }
        const Estimate h = hyper_factor(a, b, k + n);
        const Complex term = q * pref * h.value;
        sum.add(term);
        mags.push_back(std::abs(term));
        rounding += std::abs(q * pref) * h.abs_error + kEps * (4.0 * (k + n) + 10.0) * std::abs(term);

        if (k + 1 >= max_terms || k > rho) {
            // Coefficient magnitudes |c_{k+n}| recovered from the terms.
            if (bounded) {
                tail = tail_sum([&](int) { return mbound; }, k, n, rho);
            } else {
                std::vector<double> coeffs;
                double log_fact = 0.0;
                for (int i = 0; i <= k; ++i) {
                    if (i > 0) log_fact += std::log(static_cast<double>(i));
                    const double lr = rho > 0.0 ? i * std::log(rho) : 0.0;
                    coeffs.push_back(mags[i] * std::exp(log_fact - lr));
                }
                const Envelope env = fit_envelope(coeffs, n, a);
                tail = tail_sum([&](int j) { return env.at(j); }, k, n, rho);
            }
            if (tail <= std::max(0.1 * kEps * std::abs(sum.value()), 0.01 * rounding) || rho == 0.0) break;
            if (k + 1 >= max_terms) {
                if (tail > std::max(1e-12 * std::abs(sum.value()), rounding)) {
                    throw NonConvergence("series: tail bound above tolerance at the term budget");
                }
                break;
            }
        }
    }

    EvalResult r;
    r.value = sum.value();
    r.abs_error_estimate = tail + rounding;
    r.method = Method::Series;
    r.in_validity_domain = r.abs_error_estimate <= 1e-6 * std::abs(r.value);
    r.precision_loss = !r.in_validity_domain;
    return r;
}

}  // namespace weylres::symbol
