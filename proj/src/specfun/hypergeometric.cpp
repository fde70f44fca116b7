#include <cmath>

#include "weylres/errors.hpp"
#include "weylres/specfun.hpp"

namespace weylres::specfun {
namespace {

constexpr int kTermBudget = 100000;
constexpr int kQuietTerms = 3;

bool is_nonpositive_integer(Complex c) {
    return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::floor(c.real());
}

}  // namespace

Estimate gauss_2f1_half(Complex a, Complex b, Complex c) {
    if (is_nonpositive_integer(c)) {
        throw PoleError("2F1: c is a nonpositive integer", static_cast<int>(-c.real()));
    }
    Complex term = 1.0;
    CompensatedSum<Complex> sum;
    sum.add(term);
    double weighted = 2.0;
    int quiet = 0;
    for (int k = 0; k < kTermBudget; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * 0.5;
        if (term == Complex(0.0)) break;
        sum.add(term);
        weighted += (4.0 * kk + 6.0) * std::abs(term);
        if (std::abs(term) <= kEps * std::abs(sum.value())) {
            if (++quiet >= kQuietTerms) {
                return {sum.value(), kEps * weighted};
            }
        } else {
            quiet = 0;
        }
        if (k + 1 == kTermBudget) throw NonConvergence("2F1(1/2): term budget exhausted");
    }
    return {sum.value(), kEps * weighted};
}

Estimate gauss_2f1_minus1_estimate(Complex a, Complex b, Complex c) {
    // Pfaff: 2F1(a, b; c; z) = (1 - z)^(-a) 2F1(a, c - b; c; z / (z - 1))
    const Estimate half = gauss_2f1_half(a, c - b, c);
    const Complex scale = std::exp(-a * std::log(2.0));
    return {scale * half.value, std::abs(scale) * half.abs_error + kEps * std::abs(scale * half.value)};
}

Complex gauss_2f1_minus1(Complex a, Complex b, Complex c) {
    return gauss_2f1_minus1_estimate(a, b, c).value;
}

}  // namespace weylres::specfun
