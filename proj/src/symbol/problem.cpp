#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "weylres/errors.hpp"
#include "weylres/symbol.hpp"

namespace weylres {
namespace {

constexpr std::array<std::pair<Method, std::string_view>, 8> kMethodNames = {{
    {Method::Auto, "auto"},
    {Method::Quadrature, "quadrature"},
    {Method::Series, "series"},
    {Method::Confluent, "confluent"},
    {Method::BesselInverse, "bessel"},
    {Method::ElementaryEven, "elementary"},
    {Method::Asymptotic, "asymptotic"},
    {Method::HeatKernel, "heat"},
}};

}  // namespace

std::string_view to_string(Method m) {
    for (const auto& [method, name] : kMethodNames) {
        if (method == m) return name;
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
    for (const auto& [method, n] : kMethodNames) {
        if (n == name) return method;
    }
    return std::nullopt;
}

std::optional<int> spectrum_level(int d, Complex z, double tol) {
    const double n = std::round((z.real() - d) / 2.0);
    if (n < 0.0) {
        if (std::abs(z - static_cast<double>(d)) < tol) return 0;
        return std::nullopt;
    }
    if (std::abs(z - (d + 2.0 * n)) < tol) return static_cast<int>(n);
    return std::nullopt;
}

void validate(const ProblemPoint& p) {
    if (p.d < 1) throw DomainError("dimension must be a positive integer");
    if (!is_finite(p.z)) throw DomainError("z must be finite");
    if (!std::isfinite(p.rho) || p.rho < 0.0) throw DomainError("rho must be finite and nonnegative");
    if (const auto level = spectrum_level(p.d, p.z)) {
        throw PoleError("z lies on the spectrum (E_" + std::to_string(*level) + " = " +
                            std::to_string(p.d + 2 * *level) + ")",
                        *level);
    }
}

namespace symbol {

double crossover(int d) { return std::max(8.0, static_cast<double>(d)); }

}  // namespace symbol
}  // namespace weylres
