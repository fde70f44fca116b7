#include <string>

#include "weylres/asymptotics.hpp"
#include "weylres/errors.hpp"
#include "weylres/symbol.hpp"

namespace weylres::symbol {

EvalResult eval(const ProblemPoint& p, Method method) {
    validate(p);
    const bool z_is_zero = p.z == Complex(0.0);
    switch (method) {
        case Method::Quadrature: return eval_quadrature(p);
        case Method::Series: return eval_series(p);
        case Method::Confluent: return eval_confluent(p);
        case Method::HeatKernel: return eval_heat_kernel(p);
        case Method::Asymptotic: return eval_asymptotic(p);
        case Method::BesselInverse:
            if (!z_is_zero) throw DomainError("Bessel representation requires z = 0");
            return eval_bessel_inverse(p.d, p.rho);
        case Method::ElementaryEven:
            if (!z_is_zero) throw DomainError("elementary representation requires z = 0");
            return eval_elementary_even(p.d, p.rho);
        case Method::Auto: break;
    }

    std::string reasons;
    auto attempt = [&](Method m, auto&& fn) -> std::optional<EvalResult> {
        try {
            return fn();
        } catch (const PoleError&) {
            throw;
        } catch (const Error& e) {
            reasons += std::string(to_string(m)) + ": " + e.what() + "; ";
            return std::nullopt;
        }
    };

    const double cross = crossover(p.d);
    if (z_is_zero && p.d % 2 == 0 && p.rho >= cross) {
        if (auto r = attempt(Method::ElementaryEven, [&] { return eval_elementary_even(p.d, p.rho); })) return *r;
    }
    if (p.z.real() < p.d) {
        if (auto r = attempt(Method::Quadrature, [&] { return eval_quadrature(p); })) return *r;
    }
    if (p.rho <= cross) {
        if (auto r = attempt(Method::Series, [&] { return eval_series(p); })) return *r;
    }
    if (p.rho > 0.0) {
        if (auto r = attempt(Method::Confluent, [&] { return eval_confluent(p); })) return *r;
    }
    if (p.rho > cross) {
        if (auto r = attempt(Method::Series, [&] { return eval_series(p); })) return *r;
    }
    throw NoValidMethod("no representation applies: " + reasons);
}

}  // namespace weylres::symbol
