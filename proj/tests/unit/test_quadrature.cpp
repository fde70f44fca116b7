#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "weylres/quadrature.hpp"

using namespace weylres;

TEST_CASE("quadrature: smooth, singular and oscillatory integrands") {
    const quad::Result sq = quad::integrate([](double x) { return Complex(std::sqrt(x)); }, 0.0, 1.0);
    CHECK(sq.converged);
    CHECK_REL(sq.value, 2.0 / 3.0, 1e-13);

    const quad::Result osc = quad::integrate([](double x) { return Complex(std::sin(x) * std::sin(x)); }, 0.0, 10 * kPi);
    CHECK_REL(osc.value, 5 * kPi, 1e-13);

    const quad::Result cx = quad::integrate([](double x) { return std::exp(Complex(0.0, x)); }, 0.0, 2.0);
    CHECK_REL(cx.value, Complex(std::sin(2.0), 1.0 - std::cos(2.0)), 1e-14);
    CHECK(cx.abs_error < 1e-13);
}

TEST_CASE("quadrature: breakpoints and reported error bound the true error") {
    const std::array<double, 4> pts{0.0, 0.5, 2.0, 5.0};
    const quad::Result r = quad::integrate([](double x) { return Complex(std::abs(x - 0.5) * std::exp(-x)); },
                                           std::span<const double>(pts));
    // int_0^5 |x - 1/2| e^{-x} dx
    const double exact = 2.0 * std::exp(-0.5) - 0.5 - 5.5 * std::exp(-5.0);
    CHECK(std::abs(r.value.real() - exact) <= r.abs_error + 1e-15);
}

TEST_CASE("quadrature: segment budget exhaustion is reported") {
    quad::Options opt;
    opt.max_segments = 3;
    opt.rel_tol = 1e-15;
    const quad::Result r = quad::integrate([](double x) { return Complex(1.0 / std::sqrt(x)); }, 0.0, 1.0, opt);
    CHECK_FALSE(r.converged);
}
