#pragma once

// Cross-method verification harness and seeded property sweeps.

#include <cstdint>
#include <vector>

#include "weylres/report.hpp"

namespace weylres::verify {

struct Grid {
    std::vector<int> dims;
    std::vector<Complex> zs;
    std::vector<double> rhos;
};

/// d in {1,2,3,4,6}, z in {0, -1, 0.5, 0.9i, -2+3i}, rho in {1e-3, ..., 1e2}.
Grid default_grid();

/// Every representation applicable at p, in a fixed order.
std::vector<Method> applicable_methods(const ProblemPoint& p);

/// Evaluates every applicable method at every grid point. Two methods are
/// compared when both report a relative error estimate <= tol; they agree
/// when |v1 - v2| <= 10 (e1 + e2). A point also fails when no method reaches
/// tol or a method fails inside its validity domain.
MethodReport cross_method(const Grid& grid, double tol);

struct SweepOptions {
    std::vector<int> dims{1, 2, 3, 4, 6};
    std::uint64_t seed = 1;
    int samples = 120;
    double tol = 1e-8;
};

/// Random points (mt19937_64 seeded by opt.seed) checked for conjugation
/// symmetry, positivity and decay, complete monotonicity, the radial ODE and
/// agreement of two independent methods.
MethodReport property_sweep(const SweepOptions& opt);

}  // namespace weylres::verify
