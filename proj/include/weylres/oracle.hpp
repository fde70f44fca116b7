#pragma once

// Operator-level checks through the phase-space trace pairing
//   <G, p_n> = 1 / (2^d (d-1)!) int_0^inf G(rho) p_n(rho) rho^{d-1} drho,
// which equals the eigenvalue of Op(G) on the n-th eigenspace times g_n when
// G is a function of H. For G = F_{d,z} the target is g_n / (E_n - z); for
// the heat-kernel symbol it is g_n e^{-t E_n}.

#include <functional>
#include <vector>

#include "weylres/projections.hpp"
#include "weylres/report.hpp"
#include "weylres/specfun.hpp"

namespace weylres {

enum class DecayKind { Exponential, Power };

/// Exponential: |G(rho)| e^{rate rho} bounded. Power: |G(rho)| rho^{rate}
/// bounded. The pairing weight carries e^{-rho}, so any polynomial bound
/// suffices for integrability.
struct DecayClass {
    DecayKind kind = DecayKind::Power;
    double rate = 0.0;

    static DecayClass exponential(double rate) { return {DecayKind::Exponential, rate}; }
    static DecayClass power(double p) { return {DecayKind::Power, p}; }
};

struct RadialSymbol {
    std::function<Complex(double)> eval;
    DecayClass decay;
};

namespace oracle {

struct TraceOptions {
    double rel_tol = 1e-11;
    /// Panel layout is sized for levels up to this value; certification runs
    /// share one layout (and so one set of symbol evaluations) for all n.
    int layout_levels = -1;
    bool verify_decay = true;
};

/// Samples G on [1, R] and throws DecayViolation if the declared bound fails.
void verify_decay(const RadialSymbol& G, double R);

specfun::Estimate trace_pair_estimate(const RadialSymbol& G, const ProjectionIndex& idx,
                                      const TraceOptions& opt = {});
Complex trace_pair(const RadialSymbol& G, const ProjectionIndex& idx, const TraceOptions& opt = {});

/// Weyl symbol of e^{-tH}: (cosh t)^{-d} e^{-rho tanh t}.
RadialSymbol heat_symbol(int d, double t);

/// F_{d,z} evaluated with the given method; values are memoized per symbol
/// object (thread-safe), so repeated pairings reuse evaluations.
RadialSymbol resolvent_symbol(int d, Complex z, Method method = Method::Auto);

/// Methods usable for every rho > 0 at (d, z).
std::vector<Method> certifiable_methods(int d, Complex z);

/// Pairs F_{d,z} (each method in `methods`, default certifiable_methods) with
/// p_0 .. p_N and reports |pair (E_n - z) / g_n - 1| against tol.
MethodReport spectral_certify(int d, Complex z, int N, const std::vector<Method>& methods = {},
                              double tol = 1e-6);

/// Checks <heat_symbol(d, t), p_n> = g_n e^{-t E_n} for each t and n <= N.
MethodReport heat_certify(int d, const std::vector<double>& times, int N, double tol = 1e-8);

/// int_0^inf e^{tz} <heat_symbol(d, t), p_n> dt, which should equal g_n / (E_n - z)
/// for Re(z) < d.
specfun::Estimate laplace_consistency(int d, Complex z, int n);

}  // namespace oracle
}  // namespace weylres
