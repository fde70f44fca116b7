#include "weylres/specfun.hpp"

namespace weylres::specfun {

double laguerre(int n, double alpha, double x) {
    if (n <= 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace weylres::specfun
