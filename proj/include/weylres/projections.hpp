#pragma once

// Weyl symbols p_n of the spectral projections P_n of H and their relation
// p_n = -Res_{z = E_n} F_{d,z} to the resolvent symbol.

#include "weylres/specfun.hpp"
#include "weylres/types.hpp"

namespace weylres {

struct ProjectionIndex {
    int n = 0;
    int d = 1;

    /// E_n = d + 2n.
    double energy() const noexcept { return d + 2.0 * n; }
    /// g_n = C(n+d-1, d-1), the dimension of the eigenspace.
    double multiplicity() const noexcept;
};

namespace projections {

/// p_n(rho) = 2^d (-1)^n e^{-rho} L_n^{d-1}(2 rho).
double projection_symbol(const ProjectionIndex& idx, double rho);

/// (E_n - z) F_{d,z}(rho) at z = E_n - eps, Richardson-extrapolated from eps
/// and eps/2. Requires 0 < eps <= 0.1.
Complex residue_limit(const ProjectionIndex& idx, double rho, double eps);
specfun::Estimate residue_limit_estimate(const ProjectionIndex& idx, double rho, double eps);

/// -Res Gamma((d - z)/2) at z = E_n, i.e. 2 (-1)^n / n!.
double gamma_residue_factor(int n);

/// sum_{n <= N} p_n(rho) / (E_n - z), accelerated by repeated averaging of
/// the partial sums (the raw sum converges like N^{-1/2}).
specfun::Estimate spectral_sum(int d, Complex z, double rho, int N);

}  // namespace projections
}  // namespace weylres
