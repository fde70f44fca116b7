#include "weylres/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "weylres/errors.hpp"
#include "weylres/quadrature.hpp"
#include "weylres/symbol.hpp"

namespace weylres::oracle {
namespace {

// Log of a bound on |integrand| at rho beyond the oscillatory region of p_L.
double log_envelope(int d, int L, const DecayClass& decay, double rho) {
    double v = -rho + (L + d - 1.0) * std::log(2.0 * rho + 1.0) - std::lgamma(L + 1.0) + d * std::log(2.0);
    if (decay.kind == DecayKind::Exponential) {
        v -= decay.rate * rho;
    } else {
        v -= decay.rate * std::log(rho);
    }
    return v;
}

// Breakpoints for levels up to L: geometric near 0 (zeros of L_n^{d-1}(2 rho)
// accumulate like 1/n there), width 2 across the oscillatory region
// rho < 2L + d + 2, then widening panels until the envelope is negligible.
std::vector<double> layout(int d, int L, const DecayClass& decay) {
    std::vector<double> pts{0.0};
    for (double x = 1.0 / (4.0 * (L + d)); x < 1.0; x *= 2.0) pts.push_back(x);
    pts.push_back(1.0);
    const double osc_end = 2.0 * L + d + 2.0;
    for (double r = 3.0; r < osc_end; r += 2.0) pts.push_back(r);
    if (osc_end > pts.back()) pts.push_back(osc_end);
    double width = 4.0;
    double r = pts.back();
    while (log_envelope(d, L, decay, r) > -46.0 && r < 5000.0) {
        r += width;
        pts.push_back(r);
        width = std::min(10.0, 1.5 * width);
    }
    return pts;
}

double pairing_norm(int d) { return 1.0 / (std::ldexp(1.0, d) * std::tgamma(static_cast<double>(d))); }

}  // namespace

void verify_decay(const RadialSymbol& G, double R) {
    std::vector<double> weights;
    for (double rho = 1.0; rho <= std::max(R, 2.0); rho *= 2.0) {
        const Complex g = G.eval(rho);
        if (!is_finite(g)) throw DecayViolation("radial symbol is not finite at rho = " + std::to_string(rho));
        const double w = G.decay.kind == DecayKind::Exponential ? std::abs(g) * std::exp(G.decay.rate * rho)
                                                                : std::abs(g) * std::pow(rho, G.decay.rate);
        weights.push_back(w);
    }
    const std::size_t half = (weights.size() + 1) / 2;
    const double early = *std::max_element(weights.begin(), weights.begin() + half);
    for (std::size_t i = half; i < weights.size(); ++i) {
        if (weights[i] > 1e3 * early + 1e-300) {
            std::ostringstream msg;
            msg << "radial symbol violates its declared decay: weighted magnitude " << weights[i]
                << " at rho = " << std::ldexp(1.0, static_cast<int>(i)) << " against " << early << " near rho = 1";
            throw DecayViolation(msg.str());
        }
    }
}

specfun::Estimate trace_pair_estimate(const RadialSymbol& G, const ProjectionIndex& idx, const TraceOptions& opt) {
    if (idx.d < 1 || idx.n < 0) throw DomainError("trace_pair: invalid projection index");
    const int d = idx.d;
    const int L = std::max(idx.n, opt.layout_levels);
    const std::vector<double> pts = layout(d, L, G.decay);
    if (opt.verify_decay) verify_decay(G, pts.back());

    const double norm = pairing_norm(d);
    auto integrand = [&](double rho) {
        return G.eval(rho) * (projections::projection_symbol(idx, rho) * std::pow(rho, d - 1) * norm);
    };
    quad::Options qo;
    qo.rel_tol = opt.rel_tol;
    const quad::Result res = quad::integrate(integrand, std::span<const double>(pts), qo);
    if (!res.converged) throw NonConvergence("trace_pair: quadrature did not converge");
    const double cut = std::abs(integrand(pts.back())) * 10.0;
    if (cut > 1e-13 * std::max(std::abs(res.value), res.abs_integral * 1e-3)) {
        throw NonConvergence("trace_pair: integrand not negligible at the truncation point");
    }
    return {res.value, res.abs_error + cut + 10.0 * kEps * res.abs_integral};
}

Complex trace_pair(const RadialSymbol& G, const ProjectionIndex& idx, const TraceOptions& opt) {
    return trace_pair_estimate(G, idx, opt).value;
}

RadialSymbol heat_symbol(int d, double t) {
    if (d < 1) throw DomainError("dimension must be a positive integer");
    if (!(t > 0.0)) throw DomainError("heat_symbol: t must be positive");
    const double th = std::tanh(t);
    // log (cosh t)^{-d} without overflow for large t
    const double log_sech = std::log(2.0) - t - std::log1p(std::exp(-2.0 * t));
    const double scale = std::exp(d * log_sech);
    return RadialSymbol{[scale, th](double rho) { return Complex(scale * std::exp(-rho * th)); },
                        DecayClass::exponential(th)};
}

RadialSymbol resolvent_symbol(int d, Complex z, Method method) {
    validate(ProblemPoint{d, z, 0.0});
    struct Cache {
        std::mutex mutex;
        std::map<double, Complex> values;
    };
    auto cache = std::make_shared<Cache>();
    auto fn = [cache, d, z, method](double rho) {
        {
            std::lock_guard<std::mutex> lock(cache->mutex);
            if (auto it = cache->values.find(rho); it != cache->values.end()) return it->second;
        }
        const Complex v = symbol::eval(ProblemPoint{d, z, rho}, method).value;
        std::lock_guard<std::mutex> lock(cache->mutex);
        cache->values.emplace(rho, v);
        return v;
    };
    return RadialSymbol{fn, DecayClass::power(1.0)};
}

std::vector<Method> certifiable_methods(int d, Complex z) {
    std::vector<Method> out;
    const bool left = z.real() < d;
    if (left) out.push_back(Method::Quadrature);
    out.push_back(Method::Confluent);
    if (z == Complex(0.0)) {
        out.push_back(Method::BesselInverse);
        if (d % 2 == 0) out.push_back(Method::ElementaryEven);
    }
    if (left) out.push_back(Method::HeatKernel);
    out.push_back(Method::Auto);
    return out;
}

MethodReport spectral_certify(int d, Complex z, int N, const std::vector<Method>& methods, double tol) {
    if (N < 0 || N > 50) throw DomainError("spectral_certify: N must lie in [0, 50]");
    validate(ProblemPoint{d, z, 0.0});
    const std::vector<Method> list = methods.empty() ? certifiable_methods(d, z) : methods;
    MethodReport report;
    report.name = "certify";
    report.tol = tol;
    TraceOptions opt;
    opt.layout_levels = N;
    for (Method m : list) {
        const RadialSymbol G = resolvent_symbol(d, z, m);
        for (int n = 0; n <= N; ++n) {
            const ProjectionIndex idx{n, d};
            ReportEntry e;
            e.point = ProblemPoint{d, z, 0.0};
            e.method = m;
            e.level = n;
            e.target = idx.multiplicity() / (idx.energy() - z);
            try {
                const specfun::Estimate est = trace_pair_estimate(G, idx, opt);
                e.value = est.value;
                e.abs_error = est.abs_error;
                e.defect = std::abs(est.value / *e.target - 1.0);
                e.passed = e.defect <= tol;
            } catch (const Error& err) {
                e.valid = false;
                e.passed = false;
                e.note = err.what();
                e.defect = std::numeric_limits<double>::infinity();
            }
            report.max_defect = std::max(report.max_defect, e.defect);
            if (!e.passed) {
                std::ostringstream msg;
                msg << "certify d=" << d << " z=" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i n=" << n
                    << " method=" << to_string(m) << ": defect " << e.defect
                    << (e.note.empty() ? "" : " (" + e.note + ")");
                report.failures.push_back(msg.str());
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

MethodReport heat_certify(int d, const std::vector<double>& times, int N, double tol) {
    MethodReport report;
    report.name = "heat-pairing";
    report.tol = tol;
    for (double t : times) {
        const RadialSymbol G = heat_symbol(d, t);
        for (int n = 0; n <= N; ++n) {
            const ProjectionIndex idx{n, d};
            ReportEntry e;
            e.point = ProblemPoint{d, Complex(0.0), 0.0};
            e.method = Method::HeatKernel;
            e.level = n;
            e.note = "t=" + std::to_string(t);
            e.target = idx.multiplicity() * std::exp(-t * idx.energy());
            try {
                const specfun::Estimate est = trace_pair_estimate(G, idx);
                e.value = est.value;
                e.abs_error = est.abs_error;
                e.defect = std::abs(est.value / *e.target - 1.0);
                e.passed = e.defect <= tol;
            } catch (const Error& err) {
                e.valid = e.passed = false;
                e.note += std::string(" ") + err.what();
                e.defect = std::numeric_limits<double>::infinity();
            }
            report.max_defect = std::max(report.max_defect, e.defect);
            if (!e.passed) {
                std::ostringstream msg;
                msg << "heat pairing d=" << d << " " << e.note << " n=" << n << ": defect " << e.defect;
                report.failures.push_back(msg.str());
            }
            report.entries.push_back(std::move(e));
        }
    }
    return report;
}

specfun::Estimate laplace_consistency(int d, Complex z, int n) {
    const ProjectionIndex idx{n, d};
    validate(ProblemPoint{d, z, 0.0});
    if (!(z.real() < d)) throw DomainError("laplace_consistency requires Re(z) < d");
    const double rate = idx.energy() - z.real();
    const double T = 46.0 / rate;
    TraceOptions opt;
    opt.verify_decay = false;
    auto integrand = [&](double t) {
        if (t <= 0.0) return Complex(idx.multiplicity());
        return std::exp(t * z) * trace_pair(heat_symbol(d, t), idx, opt);
    };
    std::vector<double> pts{0.0};
    for (int k = 12; k >= 0; --k) pts.push_back(std::ldexp(T, -k));
    quad::Options qo;
    qo.rel_tol = 1e-10;
    const quad::Result res = quad::integrate(integrand, std::span<const double>(pts), qo);
    if (!res.converged) throw NonConvergence("laplace_consistency: quadrature did not converge");
    // Remainder beyond T is below g_n e^{-rate T} / rate.
    const double tail = idx.multiplicity() * std::exp(-rate * T) / rate;
    return {res.value, res.abs_error + tail};
}

}  // namespace weylres::oracle
