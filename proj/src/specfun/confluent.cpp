#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "weylres/errors.hpp"
#include "weylres/quadrature.hpp"
#include "weylres/specfun.hpp"

namespace weylres::specfun {
namespace {

constexpr int kTermBudget = 100000;
constexpr int kQuietTerms = 3;

// Plain Kummer series; callers keep Re(x) >= 0 so that no cancellation
// beyond what complex a introduces can occur.
Estimate kummer_series(Complex a, double c, Complex x) {
    Complex term = 1.0;
    CompensatedSum<Complex> sum;
    sum.add(term);
    double weighted = 2.0;
    int quiet = 0;
    for (int k = 0; k < kTermBudget; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) / (c + kk) * x / (kk + 1.0);
        if (term == Complex(0.0)) return {sum.value(), kEps * weighted};
        sum.add(term);
        weighted += (4.0 * kk + 6.0) * std::abs(term);
        if (std::abs(term) <= kEps * std::abs(sum.value())) {
            if (++quiet >= kQuietTerms) return {sum.value(), kEps * weighted};
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence("kummer_m: term budget exhausted");
}

// e^{-x} times the Kummer series; partial sums are rescaled by 1e-250 whenever
// the terms grow past 1e250 and the exponent is restored at the end.
Estimate kummer_series_scaled(Complex a, double c, double x) {
    constexpr double kRescale = 1e-250;
    const double log_rescale = std::log(kRescale);
    Complex term = 1.0;
    CompensatedSum<Complex> sum;
    sum.add(term);
    double weighted = 2.0;
    double log_scale = 0.0;
    int quiet = 0;
    auto finish = [&]() -> Estimate {
        const double factor = std::exp(log_scale - x);
        return {factor * sum.value(), kEps * weighted * factor};
    };
    for (int k = 0; k < kTermBudget; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) / (c + kk) * x / (kk + 1.0);
        if (term == Complex(0.0)) return finish();
        if (std::abs(term) > 1.0 / kRescale) {
            const Complex carried = sum.value() * kRescale;
            sum = CompensatedSum<Complex>();
            sum.add(carried);
            term *= kRescale;
            weighted *= kRescale;
            log_scale -= log_rescale;
        }
        sum.add(term);
        weighted += (4.0 * kk + 6.0) * std::abs(term);
        if (std::abs(term) <= kEps * std::abs(sum.value())) {
            if (++quiet >= kQuietTerms) return finish();
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence("kummer_m: term budget exhausted");
}

// U(a, c; x) = (1/Gamma(a)) int_0^inf e^{-xt} t^{a-1} (1+t)^{c-a-1} dt.
// On [0, T] the factor e^{-xt} (1+t)^gam is expanded in powers of t and
// integrated termwise, int_0^T t^{a+k-1} dt = T^{a+k} / (a+k); this is the
// analytic continuation in a, so the formula holds for every a once 1/Gamma(a)
// is folded in as 1/((a+k) Gamma(a)) = (a)_k / Gamma(a+k+1), which has no
// poles. [T, inf) is integrated in w = ln t.
Estimate tricomi_continued(Complex a, int c, double x) {
    const Complex gam = static_cast<double>(c) - a - 1.0;
    const double cut = std::min(0.25, 1.0 / x);

    constexpr int kSmallTerms = 120;
    std::vector<Complex> binom(kSmallTerms), expo(kSmallTerms);
    binom[0] = 1.0;
    expo[0] = 1.0;
    for (int k = 1; k < kSmallTerms; ++k) {
        binom[k] = binom[k - 1] * (gam - static_cast<double>(k - 1)) / static_cast<double>(k);
        expo[k] = expo[k - 1] * (-x) / static_cast<double>(k);
    }

    // rg[j] = 1/Gamma(a + j) from one Gamma value at Re(a + j0) in [1, 2):
    // downward by 1/Gamma(s) = s / Gamma(s + 1), which gives exact zeros at
    // the poles, and upward by division (no poles there).
    const int j0 = std::max(0, static_cast<int>(std::ceil(1.0 - a.real())));
    const int top = std::max(kSmallTerms + 1, j0);
    std::vector<Complex> rg(top + 1);
    rg[j0] = 1.0 / gamma(a + static_cast<double>(j0));
    for (int j = j0 - 1; j >= 0; --j) rg[j] = rg[j + 1] * (a + static_cast<double>(j));
    for (int j = j0; j < top; ++j) rg[j + 1] = rg[j] / (a + static_cast<double>(j));

    const Complex cut_pow_a = std::exp(a * std::log(cut));
    const double min_k = std::max(0.0, -a.real()) + 2.0;
    CompensatedSum<Complex> small;
    double small_abs = 0.0;
    double cut_pow_k = 1.0;
    double last = 0.0;
    Complex poch = 1.0;  // (a)_k
    int quiet = 0;
    bool done = false;
    for (int k = 0; k < kSmallTerms; ++k) {
        // Convergence is judged on the envelope sum |expo_i binom_{k-i}|:
        // the coefficient itself can vanish by cancellation.
        Complex beta = 0.0;
        double envelope = 0.0;
        for (int i = 0; i <= k; ++i) {
            beta += expo[i] * binom[k - i];
            envelope += std::abs(expo[i]) * std::abs(binom[k - i]);
        }
        const Complex weight = poch * rg[k + 1] * cut_pow_a * cut_pow_k;
        small.add(beta * weight);
        last = envelope * std::abs(weight);
        small_abs += last;
        cut_pow_k *= cut;
        poch *= a + static_cast<double>(k);
        if (k >= min_k && last <= 1e-18 * std::max(std::abs(small.value()), 1e-300)) {
            if (++quiet >= kQuietTerms) {
                done = true;
                break;
            }
        } else {
            quiet = 0;
        }
    }
    if (!done && last > 1e-15 * std::abs(small.value())) {
        throw NonConvergence("tricomi_u: small-t series did not converge");
    }

    auto log_mag = [&](double w) {
        return a.real() * w - x * std::exp(w) + gam.real() * std::log1p(std::exp(w));
    };
    const double w0 = std::log(cut);
    double peak = log_mag(w0);
    double w_peak = w0;
    double w1 = w0;
    for (double w = w0; w < 800.0; w += 0.25) {
        const double v = log_mag(w);
        if (v > peak) {
            peak = v;
            w_peak = w;
        }
        w1 = w;
        if (w > w_peak && v < peak - 48.0 && x * std::exp(w) > 1.0) break;
    }
    std::vector<double> pts{w0};
    if (w_peak > w0 && w_peak < w1) pts.push_back(w_peak);
    pts.push_back(w1);

    auto integrand = [&](double w) {
        const double t = std::exp(w);
        return std::exp(a * w - x * t + gam * std::log1p(t));
    };
    Complex big_value = 0.0;
    double big_err = 0.0;
    double big_abs = 0.0;
    if (rg[0] != Complex(0.0)) {
        quad::Options opt;
        opt.rel_tol = 1e-15;
        opt.abs_tol = 1e-17 * std::abs(small.value()) / std::abs(rg[0]);
        const quad::Result big = quad::integrate(integrand, std::span<const double>(pts), opt);
        if (!big.converged) throw NonConvergence("tricomi_u: quadrature did not converge");
        big_value = rg[0] * big.value;
        big_err = std::abs(rg[0]) * big.abs_error;
        big_abs = std::abs(rg[0]) * big.abs_integral;
    }

    const Complex total = small.value() + big_value;
    const double err = big_err + 4.0 * kEps * (small_abs + big_abs) + last +
                       kEps * (16.0 + 2.0 * j0) * std::abs(total);
    return {total, err};
}

// U(a, c; x) ~ x^{-a} sum_k (a)_k (a-c+1)_k / k! (-x)^{-k} for large x. The
// series terminates when a or a - c + 1 is a non-positive integer; otherwise
// it is accepted only if its smallest term reaches rounding level.
std::optional<Estimate> tricomi_asymptotic(Complex a, int c, double x) {
    const Complex b = a - static_cast<double>(c) + 1.0;
    Complex term = 1.0;
    CompensatedSum<Complex> sum;
    sum.add(term);
    double abs_sum = 1.0;
    for (int k = 0; k < 400; ++k) {
        const double kk = static_cast<double>(k);
        const Complex next = term * (a + kk) * (b + kk) / ((kk + 1.0) * -x);
        if (next == Complex(0.0) || std::abs(next) <= 0.5 * kEps * std::abs(sum.value())) {
            // x^{-a} = exp(-a ln x) carries a relative error of about eps |a ln x|
            const Complex log_scale = -a * std::log(x);
            const Complex scale = std::exp(log_scale);
            const double rounding = kEps * (4.0 * abs_sum + (2.0 + std::abs(log_scale)) * std::abs(sum.value()));
            return Estimate{scale * sum.value(), std::abs(scale) * (2.0 * std::abs(next) + rounding)};
        }
        if (std::abs(next) > std::abs(term)) return std::nullopt;
        term = next;
        sum.add(term);
        abs_sum += std::abs(term);
    }
    return std::nullopt;
}

}  // namespace

Estimate kummer_m_estimate(const ConfluentParams& p, Complex x) {
    if (p.c < 1) throw DomainError("kummer_m: c must be a positive integer");
    const double c = static_cast<double>(p.c);
    if (x.real() < 0.0) {
        // Kummer's transformation M(a, c; x) = e^x M(c - a, c; -x)
        const Estimate m = kummer_series(c - p.a, c, -x);
        const Complex ex = std::exp(x);
        return {ex * m.value, std::abs(ex) * m.abs_error};
    }
    return kummer_series(p.a, c, x);
}

Estimate kummer_m_scaled_estimate(const ConfluentParams& p, double x) {
    if (p.c < 1) throw DomainError("kummer_m: c must be a positive integer");
    if (!(x >= 0.0)) throw DomainError("kummer_m: scaled form requires x >= 0");
    return kummer_series_scaled(p.a, static_cast<double>(p.c), x);
}

Complex kummer_m(const ConfluentParams& p, Complex x) { return kummer_m_estimate(p, x).value; }

Estimate tricomi_u_estimate(const ConfluentParams& p, double x) {
    if (!(x > 0.0)) throw DomainError("tricomi_u: x must be positive");
    if (p.c < 1) throw DomainError("tricomi_u: c must be a positive integer");
    if (x >= 15.0) {
        if (auto e = tricomi_asymptotic(p.a, p.c, x)) return *e;
    }
    return tricomi_continued(p.a, p.c, x);
}

Complex tricomi_u(const ConfluentParams& p, double x) { return tricomi_u_estimate(p, x).value; }

}  // namespace weylres::specfun
