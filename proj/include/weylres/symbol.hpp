#pragma once

// Radial profile F_{d,z}(rho) of the Weyl symbol of (H - z)^{-1},
// H = -Laplacian + x^2 on L^2(R^d), evaluated by independent representations:
//
//   Quadrature      Laplace integral of g(s) = (1-s)^{a-1} (1+s)^{b-1} over [0,1]
//   Series          Taylor series sum c_k rho^k / k!   (entire in rho)
//   Confluent       Green's function of the confluent operator (Kummer M, Tricomi U)
//   BesselInverse   z = 0 only; modified Bessel I_m, K_m with m = (d-1)/2
//   ElementaryEven  z = 0, even d; finite sum of incomplete exponentials
//   HeatKernel      Laplace transform of the heat-kernel symbol in t
//
// with a = (d - z)/2 and b = (d + z)/2 throughout.

#include <optional>
#include <string_view>
#include <vector>

#include "weylres/specfun.hpp"
#include "weylres/types.hpp"

namespace weylres {

enum class Method {
    Auto,
    Quadrature,
    Series,
    Confluent,
    BesselInverse,
    ElementaryEven,
    Asymptotic,
    HeatKernel,
};

std::string_view to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// One evaluation site of F_{d,z}(rho).
struct ProblemPoint {
    int d = 1;
    Complex z{};
    double rho = 0.0;

    Complex a() const noexcept { return 0.5 * (static_cast<double>(d) - z); }
    Complex b() const noexcept { return 0.5 * (static_cast<double>(d) + z); }
};

struct EvalResult {
    Complex value{};
    double abs_error_estimate = 0.0;
    Method method = Method::Auto;
    bool in_validity_domain = true;
    /// Set when the representation is used in a known cancellation regime.
    bool precision_loss = false;
};

struct SeriesExpansion {
    std::vector<Complex> coefficients;  // c_0 .. c_K
    int d = 1;
    Complex z{};
    int truncation_K = 0;
    /// Bound on |c_k| for k > K.
    double tail_bound = 0.0;
};

/// Distance guard around the spectrum {d, d+2, ...}.
inline constexpr double kSpectrumGuard = 1e-10;

/// Level n with |z - (d + 2n)| < tol, if any.
std::optional<int> spectrum_level(int d, Complex z, double tol = kSpectrumGuard);

/// Throws DomainError for malformed points and PoleError on the spectrum.
void validate(const ProblemPoint& p);

namespace symbol {

/// rho at which auto routing switches from series to quadrature/elementary.
double crossover(int d);

/// Default term budget of eval_series.
inline constexpr int kSeriesBudget = 5000;

/// Integral representation, valid for Re(z) < d. With derivative_order n the
/// integrand carries the extra factor (-s)^n, giving d^n F / d rho^n.
EvalResult eval_quadrature(const ProblemPoint& p, int derivative_order = 0);

/// Taylor coefficient c_k = F^{(k)}(0).
Complex coeff_ck(int d, Complex z, int k);
specfun::Estimate coeff_ck_estimate(int d, Complex z, int k);

SeriesExpansion series_expansion(int d, Complex z, int K);

/// Sum of the Taylor series (differentiated derivative_order times) with at
/// most max_terms terms.
EvalResult eval_series(const ProblemPoint& p, int max_terms = kSeriesBudget, int derivative_order = 0);

EvalResult eval_confluent(const ProblemPoint& p);

EvalResult eval_bessel_inverse(int d, double rho);

EvalResult eval_elementary_even(int d, double rho);

/// int_0^rho v^n e^{-v} dv = n! (1 - p_n(rho) e^{-rho}), p_n the degree-n
/// Taylor polynomial of e^t. Evaluated without cancellation for rho < n + 1.
double incomplete_exp_integral(int n, double rho);

EvalResult eval_heat_kernel(const ProblemPoint& p);

/// Evaluates with the requested representation; Method::Auto routes to
/// elementary (even d, z = 0, large rho), quadrature (Re z < d), series
/// (rho <= crossover), then confluent.
EvalResult eval(const ProblemPoint& p, Method method = Method::Auto);

}  // namespace symbol
}  // namespace weylres
