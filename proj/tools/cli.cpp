#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "weylres/asymptotics.hpp"
#include "weylres/errors.hpp"
#include "weylres/oracle.hpp"
#include "weylres/projections.hpp"
#include "weylres/verify.hpp"

namespace weylres::cli {
namespace {

using Json = nlohmann::ordered_json;

double to_double(std::string_view text, const std::string& what) {
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
    return v;
}

int to_int(std::string_view text, const std::string& what) {
    int v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end || text.empty()) throw UsageError("invalid " + what + ": '" + std::string(text) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::string_view command_name(Command c) {
    switch (c) {
        case Command::Eval: return "eval";
        case Command::SeriesCoeffs: return "series-coeffs";
        case Command::Asymptotic: return "asymptotic";
        case Command::Derivative: return "derivative";
        case Command::Projection: return "projection";
        case Command::Verify: return "verify";
        case Command::Certify: return "certify";
    }
    return "unknown";
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json make_row(std::optional<double> rho, Complex value, double err, std::string_view method) {
    Json row;
    row["rho"] = rho ? number(*rho) : Json(nullptr);
    row["value_re"] = number(value.real());
    row["value_im"] = number(value.imag());
    row["err_est"] = number(err);
    row["method"] = std::string(method);
    return row;
}

Json failure(int d, std::optional<double> rho, const std::string& message) {
    Json f;
    f["d"] = d;
    f["rho"] = rho ? number(*rho) : Json(nullptr);
    f["error"] = message;
    return f;
}

struct Report {
    Json rows = Json::array();
    Json failures = Json::array();
    Json summary = Json::object();
};

void run_eval(const RunConfig& c, const std::vector<int>& dims, Report& rep) {
    for (int d : dims) {
        for (double rho : c.rhos) {
            try {
                const EvalResult r = symbol::eval(ProblemPoint{d, c.z, rho}, c.method);
                Json row = make_row(rho, r.value, r.abs_error_estimate, to_string(r.method));
                row["d"] = d;
                row["in_validity_domain"] = r.in_validity_domain;
                row["precision_loss"] = r.precision_loss;
                rep.rows.push_back(std::move(row));
            } catch (const Error& e) {
                rep.failures.push_back(failure(d, rho, e.what()));
            }
        }
    }
}

void run_series_coeffs(const RunConfig& c, const std::vector<int>& dims, Report& rep) {
    const int K = c.k.value_or(10);
    for (int d : dims) {
        try {
            for (int k = 0; k <= K; ++k) {
                const specfun::Estimate e = symbol::coeff_ck_estimate(d, c.z, k);
                Json row = make_row(std::nullopt, e.value, e.abs_error, "series");
                row["d"] = d;
                row["k"] = k;
                rep.rows.push_back(std::move(row));
            }
            rep.summary["tail_bound_d" + std::to_string(d)] = number(symbol::series_expansion(d, c.z, K).tail_bound);
        } catch (const Error& e) {
            rep.failures.push_back(failure(d, std::nullopt, e.what()));
        }
    }
}

void run_asymptotic(const RunConfig& c, const std::vector<int>& dims, Report& rep) {
    const int n = c.n.value_or(asymptotics::kMaxTerms);
    for (int d : dims) {
        try {
            Json coeffs = Json::array();
            for (const Complex& v : asymptotics::asymptotic_coeffs(d, c.z, n).d_coeffs) {
                coeffs.push_back(Json::array({number(v.real()), number(v.imag())}));
            }
            rep.summary["coefficients_d" + std::to_string(d)] = std::move(coeffs);
        } catch (const Error& e) {
            rep.failures.push_back(failure(d, std::nullopt, e.what()));
            continue;
        }
        for (double rho : c.rhos) {
            try {
                const EvalResult r = asymptotics::eval_asymptotic(ProblemPoint{d, c.z, rho}, n);
                Json row = make_row(rho, r.value, r.abs_error_estimate, to_string(r.method));
                row["d"] = d;
                rep.rows.push_back(std::move(row));
            } catch (const Error& e) {
                rep.failures.push_back(failure(d, rho, e.what()));
            }
        }
    }
}

void run_derivative(const RunConfig& c, const std::vector<int>& dims, Report& rep) {
    const int n = c.n.value_or(1);
    for (int d : dims) {
        for (double rho : c.rhos) {
            try {
                const EvalResult r = asymptotics::derivative(ProblemPoint{d, c.z, rho}, n);
                Json row = make_row(rho, r.value, r.abs_error_estimate, to_string(r.method));
                row["d"] = d;
                row["n"] = n;
                if (c.s) {
                    const BoundCheck b = asymptotics::check_bounds(d, c.z, n, *c.s, rho);
                    row["bound_rhs"] = number(b.rhs);
                    row["bound_ratio"] = number(b.ratio);
                    row["bound_passed"] = b.passed;
                    if (!b.passed) rep.failures.push_back(failure(d, rho, "derivative bound violated"));
                }
                rep.rows.push_back(std::move(row));
            } catch (const Error& e) {
                rep.failures.push_back(failure(d, rho, e.what()));
            }
        }
    }
}

void run_projection(const RunConfig& c, const std::vector<int>& dims, Report& rep) {
    const int n = c.n.value_or(0);
    for (int d : dims) {
        const ProjectionIndex idx{n, d};
        for (double rho : c.rhos) {
            try {
                const double p = projections::projection_symbol(idx, rho);
                Json row = make_row(rho, p, 0.0, "projection");
                row["d"] = d;
                row["n"] = n;
                if (c.eps) {
                    const specfun::Estimate r = projections::residue_limit_estimate(idx, rho, *c.eps);
                    row["residue_re"] = number(r.value.real());
                    row["residue_im"] = number(r.value.imag());
                    row["residue_err"] = number(r.abs_error);
                    row["residue_defect"] = number(std::abs(r.value - p));
                }
                rep.rows.push_back(std::move(row));
            } catch (const Error& e) {
                rep.failures.push_back(failure(d, rho, e.what()));
            }
        }
    }
}

void add_report_failures(const MethodReport& r, Report& rep) {
    for (const std::string& f : r.failures) {
        Json j;
        j["check"] = r.name;
        j["error"] = f;
        rep.failures.push_back(std::move(j));
    }
}

void run_verify(const RunConfig& c, Report& rep) {
    verify::Grid grid = verify::default_grid();
    if (!c.dims.empty()) grid.dims = c.dims;
    if (!c.rhos.empty()) grid.rhos = c.rhos;
    const MethodReport cross = verify::cross_method(grid, c.tol);
    for (const ReportEntry& e : cross.entries) {
        Json row = make_row(e.point.rho, e.value, e.abs_error, to_string(e.method));
        row["d"] = e.point.d;
        row["z_re"] = e.point.z.real();
        row["z_im"] = e.point.z.imag();
        row["valid"] = e.valid;
        row["note"] = e.note;
        rep.rows.push_back(std::move(row));
    }
    add_report_failures(cross, rep);

    verify::SweepOptions sweep;
    sweep.dims = grid.dims;
    sweep.seed = c.seed;
    sweep.tol = c.tol;
    const MethodReport props = verify::property_sweep(sweep);
    add_report_failures(props, rep);

    rep.summary["points"] = grid.dims.size() * grid.zs.size() * grid.rhos.size();
    rep.summary["comparisons"] = cross.discrepancies.size();
    rep.summary["max_relative_discrepancy"] = number(cross.max_defect);
    rep.summary["property_checks"] = props.entries.size();
    rep.summary["property_failures"] = props.failures.size();
    rep.summary["cross_method_failures"] = cross.failures.size();
}

void run_certify(const RunConfig& c, const std::vector<int>& dims, Report& rep) {
    const int N = c.n.value_or(10);
    double worst = 0.0;
    for (int d : dims) {
        std::vector<Method> methods;
        if (c.method != Method::Auto) methods.push_back(c.method);
        try {
            const MethodReport r = oracle::spectral_certify(d, c.z, N, methods, c.tol);
            for (const ReportEntry& e : r.entries) {
                Json row = make_row(std::nullopt, e.value, e.abs_error, to_string(e.method));
                row["d"] = d;
                row["n"] = e.level;
                row["target_re"] = number(e.target->real());
                row["target_im"] = number(e.target->imag());
                row["defect"] = number(e.defect);
                rep.rows.push_back(std::move(row));
            }
            add_report_failures(r, rep);
            worst = std::max(worst, r.max_defect);
        } catch (const Error& e) {
            rep.failures.push_back(failure(d, std::nullopt, e.what()));
        }
    }
    rep.summary["max_defect"] = number(worst);
}

Json inputs_json(const RunConfig& c, const std::vector<int>& dims) {
    Json in;
    in["d"] = dims;
    in["z_re"] = c.z.real();
    in["z_im"] = c.z.imag();
    in["rho"] = Json::array();
    for (double r : c.rhos) in["rho"].push_back(number(r));
    in["method"] = std::string(to_string(c.method));
    in["tol"] = c.tol;
    in["seed"] = c.seed;
    in["n"] = c.n ? Json(*c.n) : Json(nullptr);
    in["k"] = c.k ? Json(*c.k) : Json(nullptr);
    in["s"] = c.s ? Json(*c.s) : Json(nullptr);
    in["eps"] = c.eps ? Json(*c.eps) : Json(nullptr);
    return in;
}

std::string csv_cell(const Json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char ch : s) {
            if (ch == '"') quoted += '"';
            quoted += ch;
        }
        return quoted + "\"";
    }
    return v.dump();
}

void write_csv(const Json& rows, std::ostream& out) {
    std::vector<std::string> keys{"rho", "value_re", "value_im", "err_est", "method"};
    for (const Json& row : rows) {
        for (const auto& [key, _] : row.items()) {
            if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
        }
    }
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
    out << '\n';
    for (const Json& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            out << (i ? "," : "");
            if (row.contains(keys[i])) out << csv_cell(row[keys[i]]);
        }
        out << '\n';
    }
}

void validate_config(const RunConfig& c) {
    if (!(c.tol > 0.0 && c.tol <= 1e-2)) throw UsageError("--tol must lie in (0, 1e-2]");
    for (int d : c.dims) {
        if (d < 1) throw UsageError("--d must be a positive integer");
    }
    for (double r : c.rhos) {
        if (!std::isfinite(r) || r < 0.0) throw UsageError("--rho values must be finite and nonnegative");
    }
    if (!is_finite(c.z)) throw UsageError("z must be finite");
    if (c.n && *c.n < 0) throw UsageError("--n must be nonnegative");
    if (c.k && *c.k < 0) throw UsageError("--k must be nonnegative");
    if (c.s && !(*c.s >= 0.0 && *c.s <= 1.0)) throw UsageError("--s must lie in [0, 1]");
    if (c.eps && !(*c.eps > 0.0 && *c.eps <= 0.1)) throw UsageError("--eps must lie in (0, 0.1]");
    const bool needs_rho = c.command == Command::Eval || c.command == Command::Asymptotic ||
                           c.command == Command::Derivative || c.command == Command::Projection;
    if (needs_rho && c.rhos.empty()) throw UsageError("--rho is required for " + std::string(command_name(c.command)));
}

}  // namespace

std::vector<int> parse_dims(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() == 1) return {to_int(parts[0], "--d")};
    if (parts.size() != 2) throw UsageError("--d expects an integer or 'lo:hi'");
    const int lo = to_int(parts[0], "--d");
    const int hi = to_int(parts[1], "--d");
    if (hi < lo) throw UsageError("--d range is empty");
    std::vector<int> out;
    for (int d = lo; d <= hi; ++d) out.push_back(d);
    return out;
}

std::vector<double> parse_rho(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts.size() == 1) return {to_double(parts[0], "--rho")};
    if (parts.size() != 4) throw UsageError("--rho expects a value or 'start:stop:count:log|lin'");
    const double start = to_double(parts[0], "--rho start");
    const double stop = to_double(parts[1], "--rho stop");
    const int count = to_int(parts[2], "--rho count");
    if (count < 1) throw UsageError("--rho range must contain at least one point");
    const bool log_scale = parts[3] == "log";
    if (!log_scale && parts[3] != "lin") throw UsageError("--rho spacing must be 'log' or 'lin'");
    if (log_scale && !(start > 0.0 && stop > 0.0)) throw UsageError("log-spaced --rho needs positive bounds");
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        if (i == 0) {
            out.push_back(start);
        } else if (i == count - 1) {
            out.push_back(stop);
        } else {
            out.push_back(log_scale ? std::pow(10.0, std::log10(start) + f * (std::log10(stop) - std::log10(start)))
                                    : start + f * (stop - start));
        }
    }
    return out;
}

Complex parse_complex(const std::string& spec) {
    std::string s;
    for (char ch : spec) {
        if (ch != ' ') s += ch;
    }
    if (s.empty()) throw UsageError("empty complex number");
    if (s.back() != 'i') return Complex(to_double(s, "z"), 0.0);
    s.pop_back();
    // Split at the last sign that does not belong to an exponent.
    std::size_t split_at = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split_at = i;
            break;
        }
    }
    auto imag_part = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return to_double(t[0] == '+' ? t.substr(1) : t, "z");
    };
    if (split_at == std::string::npos) return Complex(0.0, imag_part(s));
    return Complex(to_double(s.substr(0, split_at), "z"), imag_part(s.substr(split_at)));
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Radial Weyl symbol of the harmonic-oscillator resolvent"};
    app.require_subcommand(1);

    struct Raw {
        std::string d, z, rho, method = "auto", format = "json";
        std::optional<double> z_re, z_im;
    };
    Raw raw;
    RunConfig cfg;
    const std::vector<std::pair<Command, std::string>> commands = {
        {Command::Eval, "evaluate F_{d,z}(rho)"},
        {Command::SeriesCoeffs, "Taylor coefficients c_0..c_k"},
        {Command::Asymptotic, "optimally truncated large-rho expansion"},
        {Command::Derivative, "n-th rho-derivative (with --s: derivative bound check)"},
        {Command::Projection, "projection symbol p_n (with --eps: residue limit)"},
        {Command::Verify, "cross-method grid and property sweep"},
        {Command::Certify, "trace-pairing certification against the spectrum"},
    };
    std::vector<CLI::App*> subs;
    for (const auto& [cmd, help] : commands) {
        CLI::App* sub = app.add_subcommand(std::string(command_name(cmd)), help);
        sub->add_option("--d", raw.d, "dimension, integer or lo:hi");
        sub->add_option("--z", raw.z, "spectral parameter, e.g. 0.5, -2+3i, 0.9i");
        sub->add_option("--z-re", raw.z_re, "real part of z");
        sub->add_option("--z-im", raw.z_im, "imaginary part of z");
        sub->add_option("--rho", raw.rho, "value or start:stop:count:log|lin");
        sub->add_option("--method", raw.method, "auto|quadrature|series|confluent|bessel|elementary|asymptotic|heat");
        sub->add_option("--n", cfg.n, "order / level / term count");
        sub->add_option("--k", cfg.k, "highest Taylor coefficient index");
        sub->add_option("--s", cfg.s, "interpolation exponent in [0, 1]");
        sub->add_option("--eps", cfg.eps, "distance below E_n for the residue limit");
        sub->add_option("--tol", cfg.tol, "tolerance in (0, 1e-2]");
        sub->add_option("--format", raw.format, "json|csv");
        sub->add_option("--seed", cfg.seed, "seed for randomized sweeps");
        sub->add_option("--out", cfg.out, "write the report to PATH");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i]->parsed()) cfg.command = commands[i].first;
    }

    if (!raw.d.empty()) cfg.dims = parse_dims(raw.d);
    if (!raw.z.empty()) cfg.z = parse_complex(raw.z);
    if (raw.z_re) cfg.z.real(*raw.z_re);
    if (raw.z_im) cfg.z.imag(*raw.z_im);
    if (!raw.rho.empty()) cfg.rhos = parse_rho(raw.rho);
    const auto method = parse_method(raw.method);
    if (!method) throw UsageError("unknown method '" + raw.method + "'");
    cfg.method = *method;
    if (raw.format == "json") {
        cfg.format = Format::Json;
    } else if (raw.format == "csv") {
        cfg.format = Format::Csv;
    } else {
        throw UsageError("--format must be json or csv");
    }
    validate_config(cfg);
    return cfg;
}

int run(const RunConfig& config, std::ostream& out) {
    validate_config(config);
    const std::vector<int> dims = config.dims.empty() ? std::vector<int>{1} : config.dims;
    Report rep;
    switch (config.command) {
        case Command::Eval: run_eval(config, dims, rep); break;
        case Command::SeriesCoeffs: run_series_coeffs(config, dims, rep); break;
        case Command::Asymptotic: run_asymptotic(config, dims, rep); break;
        case Command::Derivative: run_derivative(config, dims, rep); break;
        case Command::Projection: run_projection(config, dims, rep); break;
        case Command::Verify: run_verify(config, rep); break;
        case Command::Certify: run_certify(config, dims, rep); break;
    }

    std::ofstream file;
    if (config.out) {
        file.open(*config.out);
        if (!file) throw UsageError("cannot open output file " + *config.out);
    }
    std::ostream& sink = config.out ? static_cast<std::ostream&>(file) : out;
    if (config.format == Format::Json) {
        Json doc;
        doc["command"] = std::string(command_name(config.command));
        doc["inputs"] = inputs_json(config, config.command == Command::Verify && config.dims.empty()
                                                ? verify::default_grid().dims
                                                : dims);
        doc["rows"] = std::move(rep.rows);
        doc["failures"] = std::move(rep.failures);
        if (!rep.summary.empty()) doc["summary"] = std::move(rep.summary);
        sink << doc.dump(2) << '\n';
    } else {
        write_csv(rep.rows, sink);
    }
    return rep.failures.empty() ? 0 : 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const std::optional<RunConfig> cfg = parse_args(argc, argv, out);
        if (!cfg) return 0;
        return run(*cfg, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace weylres::cli
