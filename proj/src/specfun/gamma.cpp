#include <array>
#include <cmath>
#include <string>

#include "weylres/errors.hpp"
#include "weylres/specfun.hpp"

namespace weylres::specfun {
namespace {

// Lanczos approximation, g = 607/128 with Godfrey's 15 coefficients.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

bool is_pole(Complex s) {
    return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

[[noreturn]] void throw_pole(double re) {
    const int n = static_cast<int>(-re);
    // Res_{s=-n} Gamma(s) = (-1)^n / n!
    const double residue = ((n % 2 == 0) ? 1.0 : -1.0) / std::tgamma(n + 1.0);
    throw PoleError("gamma: pole at s = " + std::to_string(-n), n, residue);
}

// log Gamma(s) for Re(s) >= 1/2.
Complex lanczos_log(Complex s) {
    const Complex z = s - 1.0;
    Complex series = kLanczos[0];
    for (std::size_t k = 1; k < kLanczos.size(); ++k) {
        series += kLanczos[k] / (z + static_cast<double>(k));
    }
    const Complex t = z + kLanczosG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex lgamma(Complex s) {
    if (is_pole(s)) throw_pole(s.real());
    if (s.real() < 0.5) {
        // Gamma(s) Gamma(1 - s) = pi / sin(pi s)
        return std::log(kPi) - std::log(std::sin(kPi * s)) - lanczos_log(1.0 - s);
    }
    return lanczos_log(s);
}

Complex gamma(Complex s) {
    if (is_pole(s)) throw_pole(s.real());
    if (s.imag() == 0.0) return gamma(s.real());
    if (s.real() < 0.5) {
        return kPi / (std::sin(kPi * s) * std::exp(lanczos_log(1.0 - s)));
    }
    return std::exp(lanczos_log(s));
}

double gamma(double s) {
    if (s <= 0.0 && s == std::floor(s)) throw_pole(s);
    return std::tgamma(s);
}

}  // namespace weylres::specfun
