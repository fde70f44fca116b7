#include "weylres/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "weylres/asymptotics.hpp"
#include "weylres/errors.hpp"

namespace weylres::verify {
namespace {

std::string describe(const ProblemPoint& p) {
    std::ostringstream s;
    s << "d=" << p.d << " z=" << p.z.real() << (p.z.imag() < 0 ? "" : "+") << p.z.imag() << "i rho=" << p.rho;
    return s.str();
}

// Representations whose failure inside their domain is an error; the series
// and the asymptotic sum are range-limited and only compared when they
// deliver the requested accuracy.
bool is_contract_method(Method m) { return m != Method::Series && m != Method::Asymptotic; }

double rel(double err, Complex v) { return err / std::max(std::abs(v), 1e-300); }

}  // namespace

Grid default_grid() {
    Grid g;
    g.dims = {1, 2, 3, 4, 6};
    g.zs = {Complex(0.0), Complex(-1.0), Complex(0.5), Complex(0.0, 0.9), Complex(-2.0, 3.0)};
    for (int e = -3; e <= 2; ++e) g.rhos.push_back(std::pow(10.0, e));
    return g;
}

std::vector<Method> applicable_methods(const ProblemPoint& p) {
    std::vector<Method> out;
    const bool left = p.z.real() < p.d;
    const bool zero = p.z == Complex(0.0);
    if (left) out.push_back(Method::Quadrature);
    out.push_back(Method::Series);
    if (p.rho > 0.0) out.push_back(Method::Confluent);
    if (zero && p.rho > 0.0) out.push_back(Method::BesselInverse);
    if (zero && p.d % 2 == 0 && p.rho > 0.0) out.push_back(Method::ElementaryEven);
    if (left) out.push_back(Method::HeatKernel);
    if (p.rho > 0.0) out.push_back(Method::Asymptotic);
    return out;
}

MethodReport cross_method(const Grid& grid, double tol) {
    MethodReport report;
    report.name = "cross-method";
    report.tol = tol;
    for (int d : grid.dims) {
        for (Complex z : grid.zs) {
            for (double rho : grid.rhos) {
                const ProblemPoint p{d, z, rho};
                std::vector<ReportEntry> usable;
                for (Method m : applicable_methods(p)) {
                    ReportEntry e;
                    e.point = p;
                    e.method = m;
                    try {
                        const EvalResult r = symbol::eval(p, m);
                        e.value = r.value;
                        e.abs_error = r.abs_error_estimate;
                        e.valid = std::isfinite(r.abs_error_estimate) && rel(r.abs_error_estimate, r.value) <= tol;
                        if (!e.valid) e.note = "estimate above tolerance";
                        if (r.precision_loss) e.note += e.note.empty() ? "precision loss" : "; precision loss";
                    } catch (const Error& err) {
                        e.valid = false;
                        e.note = err.what();
                        if (is_contract_method(m)) {
                            e.passed = false;
                            report.failures.push_back(describe(p) + " " + std::string(to_string(m)) +
                                                      " failed in its domain: " + err.what());
                        }
                    }
                    if (e.valid) usable.push_back(e);
                    report.entries.push_back(std::move(e));
                }
                if (usable.empty()) {
                    report.failures.push_back(describe(p) + ": no method reached the tolerance");
                    continue;
                }
                for (std::size_t i = 0; i < usable.size(); ++i) {
                    for (std::size_t j = i + 1; j < usable.size(); ++j) {
                        Discrepancy dc;
                        dc.point = p;
                        dc.first = usable[i].method;
                        dc.second = usable[j].method;
                        dc.difference = std::abs(usable[i].value - usable[j].value);
                        dc.allowed = 10.0 * (usable[i].abs_error + usable[j].abs_error);
                        dc.passed = dc.difference <= dc.allowed;
                        report.max_defect = std::max(report.max_defect, rel(dc.difference, usable[i].value));
                        if (!dc.passed) {
                            std::ostringstream msg;
                            msg << describe(p) << " " << to_string(dc.first) << " vs " << to_string(dc.second)
                                << ": |diff| " << dc.difference << " > " << dc.allowed;
                            report.failures.push_back(msg.str());
                        }
                        report.discrepancies.push_back(dc);
                    }
                }
            }
        }
    }
    return report;
}

MethodReport property_sweep(const SweepOptions& opt) {
    MethodReport report;
    report.name = "property-sweep";
    report.tol = opt.tol;
    if (opt.dims.empty()) return report;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick_dim(0, opt.dims.size() - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto fail = [&](const ProblemPoint& p, const std::string& what, double defect) {
        std::ostringstream msg;
        msg << describe(p) << ": " << what << " (defect " << defect << ")";
        report.failures.push_back(msg.str());
    };
    auto record = [&](const ProblemPoint& p, Method m, Complex v, double defect, double limit, const char* what) {
        ReportEntry e;
        e.point = p;
        e.method = m;
        e.value = v;
        e.defect = defect;
        e.passed = defect <= limit;
        e.note = what;
        report.max_defect = std::max(report.max_defect, defect);
        if (!e.passed) fail(p, what, defect);
        report.entries.push_back(std::move(e));
    };

    for (int i = 0; i < opt.samples; ++i) {
        const int d = opt.dims[pick_dim(rng)];
        const bool real_z = unit(rng) < 0.4;
        const double re = -4.0 + (d - 0.3 + 4.0) * unit(rng);
        const double im = real_z ? 0.0 : -4.0 + 8.0 * unit(rng);
        const double rho = std::pow(10.0, -3.0 + 5.0 * unit(rng));
        const ProblemPoint p{d, Complex(re, im), rho};
        const ProblemPoint pc{d, std::conj(p.z), rho};
        try {
            const EvalResult f = symbol::eval(p);
            const EvalResult fc = symbol::eval(pc);
            record(p, f.method, f.value, std::abs(fc.value - std::conj(f.value)) / std::abs(f.value), 1e-12,
                   "conjugation symmetry");

            // Independent second representation.
            const Method other = rho > symbol::crossover(d) || f.method == Method::Series ? Method::Confluent
                                                                                          : Method::Series;
            const EvalResult g = symbol::eval(p, other);
            if (rel(g.abs_error_estimate, g.value) <= opt.tol) {
                const double allowed = 10.0 * (f.abs_error_estimate + g.abs_error_estimate);
                record(p, other, g.value, std::abs(f.value - g.value) / allowed, 1.0, "two-method agreement");
            }

            if (real_z) {
                const EvalResult next = symbol::eval(ProblemPoint{d, p.z, rho * 1.1});
                const bool ok = f.value.real() > 0.0 && next.value.real() < f.value.real();
                record(p, f.method, f.value, ok ? 0.0 : 1.0, 0.0, "positivity and decay");
                double worst = 0.0;
                for (int n = 1; n <= 10; ++n) {
                    const EvalResult dn = asymptotics::derivative(p, n);
                    const double signed_value = (n % 2 == 0 ? 1.0 : -1.0) * dn.value.real();
                    // allow the value's own error estimate below zero
                    if (signed_value < -dn.abs_error_estimate) worst = std::max(worst, -signed_value);
                }
                record(p, f.method, f.value, worst, 0.0, "complete monotonicity");
            }

            if (rho >= 0.1 && rho <= 10.0) {
                const EvalResult f0 = symbol::eval_series(p);
                const EvalResult f1 = symbol::eval_series(p, symbol::kSeriesBudget, 1);
                const EvalResult f2 = symbol::eval_series(p, symbol::kSeriesBudget, 2);
                const Complex residual = -f2.value - (d / rho) * f1.value - (p.z / rho) * f0.value + f0.value - 1.0 / rho;
                record(p, Method::Series, f0.value, std::abs(residual) * rho, 1e-6, "radial ODE residual");
            }
        } catch (const Error& err) {
            fail(p, std::string("evaluation error: ") + err.what(), 0.0);
        }
    }
    return report;
}

}  // namespace weylres::verify
