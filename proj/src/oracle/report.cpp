#include "weylres/report.hpp"

#include <algorithm>

namespace weylres {

void MethodReport::merge(const MethodReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    discrepancies.insert(discrepancies.end(), other.discrepancies.begin(), other.discrepancies.end());
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    max_defect = std::max(max_defect, other.max_defect);
}

}  // namespace weylres
