#include "weylres/projections.hpp"

#include <cmath>
#include <vector>

#include "weylres/errors.hpp"
#include "weylres/symbol.hpp"

namespace weylres {

double ProjectionIndex::multiplicity() const noexcept {
    double g = 1.0;
    for (int k = 1; k <= d - 1; ++k) g = g * (n + k) / k;
    return std::round(g);
}

namespace projections {
namespace {

void check_index(const ProjectionIndex& idx) {
    if (idx.d < 1) throw DomainError("dimension must be a positive integer");
    if (idx.n < 0) throw DomainError("projection level must be nonnegative");
}

}  // namespace

double projection_symbol(const ProjectionIndex& idx, double rho) {
    check_index(idx);
    const double sign = (idx.n % 2 == 0) ? 1.0 : -1.0;
    return std::ldexp(sign * std::exp(-rho) * specfun::laguerre(idx.n, idx.d - 1.0, 2.0 * rho), idx.d);
}

double gamma_residue_factor(int n) {
    if (n < 0) throw DomainError("pole index must be nonnegative");
    // Gamma(w) ~ r / (w + n) at w = -n; with w = (d - z)/2 the residue in z is -2r.
    try {
        specfun::gamma(Complex(-static_cast<double>(n)));
    } catch (const PoleError& e) {
        return 2.0 * e.residue();
    }
    throw Error("gamma did not report a pole at a nonpositive integer");
}

specfun::Estimate residue_limit_estimate(const ProjectionIndex& idx, double rho, double eps) {
    check_index(idx);
    if (!(eps > 0.0 && eps <= 0.1)) throw DomainError("residue_limit: eps must lie in (0, 0.1]");
    auto scaled = [&](double e) {
        const EvalResult r = symbol::eval_series(ProblemPoint{idx.d, Complex(idx.energy() - e), rho});
        return std::pair{e * r.value, e * r.abs_error_estimate};
    };
    const auto [f1, e1] = scaled(eps);
    const auto [f2, e2] = scaled(0.5 * eps);
    const auto [f4, e4] = scaled(0.25 * eps);
    // f(eps) = p_n + c1 eps + c2 eps^2 + ...: one Richardson step removes c1.
    // The same step at eps/2 measures the remaining eps^2 term.
    const Complex value = 2.0 * f2 - f1;
    const Complex finer = 2.0 * f4 - f2;
    const double err = 2.0 * std::abs(value - finer) + 2.0 * e2 + e1 + 1e-3 * e4;
    return {value, err};
}

Complex residue_limit(const ProjectionIndex& idx, double rho, double eps) {
    return residue_limit_estimate(idx, rho, eps).value;
}

specfun::Estimate spectral_sum(int d, Complex z, double rho, int N) {
    if (N < 1) throw DomainError("spectral_sum: N must be positive");
    validate(ProblemPoint{d, z, rho});
    std::vector<Complex> partial;
    partial.reserve(N + 1);
    CompensatedSum<Complex> sum;
    for (int n = 0; n <= N; ++n) {
        const ProjectionIndex idx{n, d};
        sum.add(projection_symbol(idx, rho) / (idx.energy() - z));
        partial.push_back(sum.value());
    }
    // Each pass replaces S_k by (S_k + S_{k+1}) / 2.
    const int passes = std::min(8, N / 4);
    Complex previous = partial.back();
    double change = std::abs(partial.back() - partial[partial.size() - 2]);
    for (int pass = 0; pass < passes; ++pass) {
        for (std::size_t k = 0; k + 1 < partial.size(); ++k) partial[k] = 0.5 * (partial[k] + partial[k + 1]);
        partial.pop_back();
        change = std::abs(partial.back() - previous);
        previous = partial.back();
    }
    return {partial.back(), change};
}

}  // namespace projections
}  // namespace weylres
