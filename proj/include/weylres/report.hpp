#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylres/symbol.hpp"

namespace weylres {

/// One value produced by one method at one point, optionally compared with
/// an exact target.
struct ReportEntry {
    ProblemPoint point;
    Method method = Method::Auto;
    /// Projection level for certification entries, -1 otherwise.
    int level = -1;
    Complex value{};
    double abs_error = 0.0;
    std::optional<Complex> target;
    /// Relative defect against the target (0 when there is none).
    double defect = 0.0;
    /// Method applicable at the point and within its own error budget.
    bool valid = true;
    bool passed = true;
    std::string note;
};

/// Comparison of two methods at one point: passes when
/// |v1 - v2| <= allowed = 10 (e1 + e2).
struct Discrepancy {
    ProblemPoint point;
    Method first = Method::Auto;
    Method second = Method::Auto;
    double difference = 0.0;
    double allowed = 0.0;
    bool passed = true;
};

struct MethodReport {
    std::string name;
    double tol = 0.0;
    std::vector<ReportEntry> entries;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> failures;
    double max_defect = 0.0;

    bool passed() const noexcept { return failures.empty(); }
    void merge(const MethodReport& other);
};

}  // namespace weylres
