#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "weylres/types.hpp"

namespace testing {

using weylres::Complex;

inline double rel_diff(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

#define CHECK_REL(actual, expected, tol)                                                       \
    do {                                                                                       \
        const ::weylres::Complex check_rel_a_ = (actual);                                      \
        const ::weylres::Complex check_rel_b_ = (expected);                                    \
        INFO("actual = " << check_rel_a_ << ", expected = " << check_rel_b_);                 \
        CHECK(::testing::rel_diff(check_rel_a_, check_rel_b_) <= (tol));                      \
    } while (0)

}  // namespace testing
