#pragma once

// Command-line front end. `run` is separated from argument parsing so the
// commands can be driven (and tested) without a process boundary.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylres/symbol.hpp"

namespace weylres::cli {

enum class Command { Eval, SeriesCoeffs, Asymptotic, Derivative, Projection, Verify, Certify };
enum class Format { Json, Csv };

struct RunConfig {
    Command command = Command::Eval;
    /// Empty: the command default ({1}, or the verification grid for verify).
    std::vector<int> dims;
    Complex z{};
    /// Empty: the command default (required for rho-dependent commands,
    /// the verification grid for verify).
    std::vector<double> rhos;
    Method method = Method::Auto;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<double> s;
    std::optional<double> eps;
    double tol = 1e-8;
    Format format = Format::Json;
    std::uint64_t seed = 1;
    std::optional<std::string> out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "2" or "1:4" (inclusive).
std::vector<int> parse_dims(const std::string& spec);
/// A single value or "start:stop:count:log|lin".
std::vector<double> parse_rho(const std::string& spec);
/// "a", "bi", "a+bi", "a-bi" (also "i", "-i").
Complex parse_complex(const std::string& spec);

/// Throws UsageError on malformed arguments. Returns nullopt when help was
/// printed to `out`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes the command and writes the report. Exit status: 0 all passed,
/// 1 any failure.
int run(const RunConfig& config, std::ostream& out);

/// parse_args + run with usage errors mapped to exit status 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylres::cli
