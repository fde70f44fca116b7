#include <doctest.h>

#include <cmath>
#include <vector>

#include "support.hpp"
#include "weylres/errors.hpp"
#include "weylres/quadrature.hpp"
#include "weylres/specfun.hpp"
#include "weylres/symbol.hpp"

using namespace weylres;
using namespace weylres::specfun;

namespace {

// Independent oracles for the Bessel functions: the ascending series for I_nu
// and the integral K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt.
double bessel_i_series(double nu, double x) {
    double term = std::pow(0.5 * x, nu) / std::tgamma(nu + 1.0);
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= 0.25 * x * x / (k * (k + nu));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double bessel_k_integral(double nu, double x) {
    const std::array<double, 5> pts{0.0, 1.0, 2.0, 4.0, 8.0};
    return quad::integrate([&](double t) { return Complex(std::exp(-x * std::cosh(t)) * std::cosh(nu * t)); },
                           std::span<const double>(pts))
        .value.real();
}

// Fourth-order central differences.
template <class F>
std::pair<Complex, Complex> derivatives(F f, double x, double h) {
    const Complex fm2 = f(x - 2 * h), fm1 = f(x - h), f0 = f(x), fp1 = f(x + h), fp2 = f(x + 2 * h);
    const Complex d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    const Complex d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    return {d1, d2};
}

}  // namespace

TEST_CASE("gamma: classical values") {
    CHECK_REL(gamma(Complex(0.5)), std::sqrt(kPi), 1e-14);
    double fact = 1.0;
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) fact *= n;
        CHECK_REL(gamma(Complex(n + 1.0)), fact, 1e-13);
    }
    const double x = 1.5, y = 0.5;
    const Complex lhs = gamma(Complex(x + 1)) * gamma(Complex(y)) / gamma(Complex(x + y + 1));
    const Complex rhs = x / (x + y) * gamma(Complex(x)) * gamma(Complex(y)) / gamma(Complex(x + y));
    CHECK_REL(lhs, rhs, 1e-14);
}

TEST_CASE("gamma: reference values and reflection") {
    CHECK_REL(gamma(Complex(0.3, 4.0)), Complex(0.0011646436848114906, 0.0033525598880352024), 1e-13);
    CHECK_REL(gamma(Complex(-2.5, 0.5)), Complex(-0.33387520352243234, -0.20645730796360841), 1e-13);
    CHECK_REL(gamma(Complex(40.5)), std::tgamma(40.5), 1e-13);
    CHECK_REL(std::exp(lgamma(Complex(30.0, 12.0))), gamma(Complex(30.0, 12.0)), 1e-12);
}

TEST_CASE("gamma: recurrence on a complex grid") {
    for (double re = -9.7; re < 45.0; re += 2.3) {
        for (double im : {-7.0, -0.4, 0.0, 1.3, 11.0}) {
            const Complex s(re, im);
            CHECK_REL(gamma(s + 1.0), s * gamma(s), 1e-12);
        }
    }
}

TEST_CASE("gamma: poles carry the residue") {
    for (int n = 0; n <= 6; ++n) {
        try {
            gamma(Complex(-static_cast<double>(n)));
            FAIL("expected a pole at -" << n);
        } catch (const PoleError& e) {
            CHECK(e.pole_index() == n);
            CHECK(e.residue() == doctest::Approx((n % 2 ? -1.0 : 1.0) / std::tgamma(n + 1.0)).epsilon(1e-14));
            CHECK(e.residue_sign() == (n % 2 ? -1 : 1));
        }
    }
    CHECK_THROWS_AS(specfun::gamma(-3.0), PoleError);
}

TEST_CASE("laguerre: low degrees") {
    for (double alpha : {0.0, 1.0, 4.0}) {
        for (double x : {0.0, 0.3, 7.0}) CHECK(laguerre(0, alpha, x) == 1.0);
    }
    CHECK(laguerre(1, 0, 2.0) == doctest::Approx(-1.0));
    CHECK(laguerre(1, 3, 0.5) == doctest::Approx(3.5));
    CHECK(laguerre(2, 0, 1.0) == doctest::Approx(-0.5));
}

TEST_CASE("laguerre: weighted integral equals (-1)^n (d+n-1)! / n!") {
    std::vector<double> pts;
    for (double x = 0.0; x <= 120.0; x += 4.0) pts.push_back(x);
    for (int d : {1, 2, 3, 5}) {
        for (int n : {0, 1, 3, 6}) {
            const quad::Result r = quad::integrate(
                [&](double v) { return Complex(std::pow(v, d - 1) * std::exp(-v) * laguerre(n, d - 1, 2.0 * v)); },
                std::span<const double>(pts));
            const double expected = (n % 2 ? -1.0 : 1.0) * std::tgamma(d + n) / std::tgamma(n + 1.0);
            INFO("d=" << d << " n=" << n);
            CHECK_REL(r.value, expected, 1e-11);
        }
    }
}

TEST_CASE("laguerre: agrees with both confluent reductions") {
    for (int n = 0; n <= 15; ++n) {
        for (int alpha = 0; alpha <= 6; ++alpha) {
            for (double x : {0.1, 1.0, 5.0, 20.0}) {
                const double L = laguerre(n, alpha, x);
                double poch = 1.0, fact = 1.0;
                for (int j = 0; j < n; ++j) {
                    poch *= alpha + 1.0 + j;
                    fact *= j + 1.0;
                }
                const Complex via_m = poch / fact * kummer_m({Complex(-n), alpha + 1}, Complex(x));
                const Complex via_u = (n % 2 ? -1.0 : 1.0) / fact * tricomi_u({Complex(-n), alpha + 1}, x);
                const double scale = std::max(std::abs(L), 1e-300);
                INFO("n=" << n << " alpha=" << alpha << " x=" << x);
                // Near a zero of L the relative comparison is meaningless;
                // compare against the size of the largest term instead.
                double big = 0.0, term = poch / fact;
                for (int k = 0; k <= n; ++k) {
                    big = std::max(big, std::abs(term));
                    term *= -(n - k) * x / ((k + 1.0) * (alpha + k + 1.0));
                }
                CHECK(std::abs(via_m - L) <= 1e-9 * std::max(scale, 1e-6 * big));
                CHECK(std::abs(via_u - L) <= 1e-9 * std::max(scale, 1e-6 * big));
            }
        }
    }
}

TEST_CASE("kummer_m: values") {
    CHECK(kummer_m({Complex(2.3, 1.0), 3}, Complex(0.0)) == Complex(1.0));
    CHECK_REL(kummer_m({Complex(1.0), 2}, Complex(2.0)), (std::exp(2.0) - 1.0) / 2.0, 1e-14);
    CHECK_REL(kummer_m({Complex(1.0), 2}, Complex(2.0)), 3.19452805, 1e-8);
    CHECK_REL(kummer_m({Complex(0.5, 2.0), 3}, Complex(-40.0)), Complex(0.44025818283801741, 0.24643125739392675),
              1e-11);
    CHECK_REL(kummer_m({Complex(1.0), 2}, Complex(200.0)), std::expm1(200.0) / 200.0, 1e-11);
    // scaled form: e^{-x} M(1, 2; x) = (1 - e^{-x}) / x, also past the overflow of e^x
    for (double x : {0.0, 0.5, 30.0, 900.0, 2500.0}) {
        const double expected = x == 0.0 ? 1.0 : -std::expm1(-x) / x;
        CHECK_REL(kummer_m_scaled_estimate({Complex(1.0), 2}, x).value, expected, 1e-12);
    }
    CHECK_REL(kummer_m_scaled_estimate({Complex(0.5, 2.0), 3}, 40.0).value,
              std::exp(-40.0) * kummer_m({Complex(0.5, 2.0), 3}, Complex(40.0)), 1e-12);
}

TEST_CASE("tricomi_u: values") {
    CHECK_REL(tricomi_u({Complex(-1.0), 1}, 2.0), 1.0, 1e-13);
    CHECK_REL(tricomi_u({Complex(1.0), 2}, 2.0), 0.5, 1e-13);
    CHECK(std::abs(tricomi_u({Complex(3.0), 2}, 400.0) * std::pow(400.0, 3) - 1.0) < 0.02);
    CHECK_REL(tricomi_u({Complex(3.0), 6}, 12.0), 0.00091628086419753086, 1e-12);
    CHECK_REL(tricomi_u({Complex(0.25), 1}, 3.0), 0.74680569742278632, 1e-12);
    CHECK_REL(tricomi_u({Complex(-2.5, 0.3), 4}, 0.01), Complex(-2993656.8284328598, 1035398.7813295357), 1e-10);
    // large x: the asymptotic series, terminating or optimally truncated
    CHECK_REL(tricomi_u({Complex(0.25), 1}, 40.0), 0.3970257131074392, 1e-13);
    CHECK_REL(tricomi_u({Complex(2.5, -1.0), 4}, 150.0), Complex(1.1289002091266293e-6, -3.5055659706143945e-6),
              1e-13);
    CHECK_REL(tricomi_u({Complex(-2.5, 0.3), 4}, 30.0), Complex(1772.8606256630213, -2337.1985907920264), 1e-12);
    CHECK_REL(tricomi_u({Complex(2.0), 3}, 50.0), 1.0 / (50.0 * 50.0), 1e-15);
    for (double x : {14.0, 15.0, 16.0}) {
        const specfun::Estimate e = tricomi_u_estimate({Complex(1.3, 0.4), 3}, x);
        CHECK(e.abs_error <= 1e-12 * std::abs(e.value));
    }
    CHECK_THROWS_AS(tricomi_u({Complex(1.0), 2}, 0.0), DomainError);
    CHECK_THROWS_AS(tricomi_u({Complex(1.0), 2}, -1.0), DomainError);
}

TEST_CASE("tricomi_u: contiguous relation in a") {
    for (Complex a : {Complex(0.7), Complex(-1.3, 0.4), Complex(2.2, -1.0), Complex(-3.0)}) {
        for (int c : {1, 3, 5}) {
            for (double x : {0.05, 1.0, 9.0}) {
                const Complex um = tricomi_u({a - 1.0, c}, x);
                const Complex u0 = tricomi_u({a, c}, x);
                const Complex up = tricomi_u({a + 1.0, c}, x);
                const Complex t1 = (2.0 * a + x - static_cast<double>(c)) * u0;
                const Complex t2 = a * (a - static_cast<double>(c) + 1.0) * up;
                const double scale = std::abs(um) + std::abs(t1) + std::abs(t2);
                INFO("a=" << a << " c=" << c << " x=" << x);
                CHECK(std::abs(um - t1 + t2) <= 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("confluent ODE is satisfied by M and U") {
    for (Complex a : {Complex(0.5), Complex(1.0, 0.5), Complex(-1.5, 0.3), Complex(2.3)}) {
        for (int c : {1, 2, 4}) {
            for (double x : {0.3, 1.0, 4.0, 10.0}) {
                const double h = 1e-3 * std::min(x, 1.0);
                auto m = [&](double t) { return kummer_m({a, c}, Complex(t)); };
                auto u = [&](double t) { return tricomi_u({a, c}, t); };
                const auto [m1, m2] = derivatives(m, x, h);
                const auto [u1, u2] = derivatives(u, x, h);
                const Complex rm = x * m2 + (c - x) * m1 - a * m(x);
                const Complex ru = x * u2 + (c - x) * u1 - a * u(x);
                INFO("a=" << a << " c=" << c << " x=" << x);
                // residuals relative to the size of the individual terms
                const double sm = std::abs(x * m2) + std::abs((c - x) * m1) + std::abs(a * m(x));
                const double su = std::abs(x * u2) + std::abs((c - x) * u1) + std::abs(a * u(x));
                CHECK(std::abs(rm) <= 1e-8 * sm);
                CHECK(std::abs(ru) <= 1e-8 * su);
            }
        }
    }
}

TEST_CASE("bessel: half-integer closed forms") {
    CHECK_REL(bessel_i({1}, 1.0), std::sqrt(2.0 / kPi) * std::sinh(1.0), 1e-13);
    CHECK_REL(bessel_i({1}, 1.0), 0.93767488824548765, 1e-13);
    CHECK_REL(bessel_k({1}, 2.0), std::sqrt(kPi / 4.0) * std::exp(-2.0), 1e-13);
    CHECK_REL(bessel_k({1}, 2.0), 0.11993777, 5e-8);
    CHECK_REL(bessel_k({3}, 20.0), std::sqrt(kPi / 40.0) * std::exp(-20.0) * (1.0 + 1.0 / 20.0), 1e-14);
    CHECK_REL(bessel_k({3}, 20.0), 6.0651926734428169e-10, 1e-14);
}

TEST_CASE("bessel: integer orders against independent oracles") {
    CHECK_REL(bessel_i({2}, 3.0), 3.9533702174026094, 1e-12);
    CHECK_REL(bessel_k({4}, 3.0), 0.061510458471742038, 1e-12);
    for (int twice_m : {0, 1, 2, 3, 5}) {
        for (double x : {0.2, 1.5, 8.0}) {
            CHECK_REL(bessel_i({twice_m}, x), bessel_i_series(0.5 * twice_m, x), 1e-12);
            CHECK_REL(bessel_k({twice_m}, x), bessel_k_integral(0.5 * twice_m, x), 1e-11);
        }
    }
}

TEST_CASE("bessel: Wronskian I_m K_{m+1} + I_{m+1} K_m = 1/x") {
    const double x = 3.0;
    const double w = bessel_i({2}, x) * bessel_k({4}, x) + bessel_i({4}, x) * bessel_k({2}, x);
    CHECK(w == doctest::Approx(1.0 / x).epsilon(1e-12));
    const double w_oracle = bessel_i_series(1.0, x) * bessel_k_integral(2.0, x) +
                            bessel_i_series(2.0, x) * bessel_k_integral(1.0, x);
    CHECK(w_oracle == doctest::Approx(1.0 / x).epsilon(1e-10));
}

TEST_CASE("bessel: positivity and monotonicity") {
    for (int twice_m : {0, 1, 2, 3, 4, 7}) {
        double prev_i = 0.0, prev_k = std::numeric_limits<double>::infinity();
        for (double x = 0.05; x < 60.0; x *= 1.3) {
            const double i = bessel_i({twice_m}, x);
            const double k = bessel_k({twice_m}, x);
            CHECK(i > 0.0);
            CHECK(k > 0.0);
            CHECK(i > prev_i);
            CHECK(k < prev_k);
            prev_i = i;
            prev_k = k;
        }
    }
}

TEST_CASE("gauss_2f1_minus1: closed forms and poles") {
    CHECK_REL(gauss_2f1_minus1(3.0, 1.7, 1.7), 0.125, 1e-14);
    CHECK_REL(gauss_2f1_minus1(1.0, 1.0, 2.0), std::log(2.0), 1e-14);
    // direct alternating series oracle: sum (-1)^k / (k+1), averaged
    double s = 0.0, prev = 0.0;
    for (int k = 0; k < 2000; ++k) {
        prev = s;
        s += (k % 2 ? -1.0 : 1.0) / (k + 1.0);
    }
    CHECK(std::abs(gauss_2f1_minus1(1.0, 1.0, 2.0).real() - 0.5 * (s + prev)) < 1e-6);
    CHECK_REL(gauss_2f1_minus1(0.5, 1.5, Complex(2.5, 1.0)), Complex(0.81710354646844856, 0.054550286318130646),
              1e-12);
    CHECK_THROWS_AS(gauss_2f1_minus1(1.0, 1.0, -2.0), PoleError);
}

TEST_CASE("gauss_2f1_minus1: Taylor coefficient against its Euler integral") {
    // (d, z, k) = (3, 1, 2): c_2 = int_0^1 (1+s) s^2 ds = 7/12
    const quad::Result euler = quad::integrate([](double s) { return Complex((1.0 + s) * s * s); }, 0.0, 1.0);
    CHECK_REL(symbol::coeff_ck(3, Complex(1.0), 2), euler.value, 1e-12);
    CHECK_REL(euler.value, 7.0 / 12.0, 1e-14);
}
