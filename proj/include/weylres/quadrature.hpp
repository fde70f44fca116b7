#pragma once

// Adaptive Gauss-Kronrod (10/21 point) integration of complex-valued
// integrands on finite intervals. Error estimation follows QUADPACK's qk21;
// subdivision is global (the segment with the largest error is bisected).

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <tuple>
#include <vector>

#include "weylres/types.hpp"

namespace weylres::quad {

struct Options {
    double abs_tol = 0.0;
    double rel_tol = 1e-14;
    int max_segments = 4000;
};

struct Result {
    Complex value{};
    double abs_error = 0.0;
    /// Integral of |f|; a scale for rounding-error floors.
    double abs_integral = 0.0;
    int evaluations = 0;
    bool converged = true;
};

namespace detail {

inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
    double a, b;
    Complex value;
    double error;
    double abs_value;
};

template <class F>
Segment gk21(F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double abs_half = std::abs(half);

    std::array<Complex, 10> f1{}, f2{};
    const Complex fc = f(center);
    Complex resg{0.0};
    Complex resk = fc * kWgk[10];
    double resabs = std::abs(fc) * kWgk[10];
    for (int j = 0; j < 5; ++j) {
        const int jtw = 2 * j + 1;
        const double dx = half * kXgk[jtw];
        const Complex v1 = f(center - dx);
        const Complex v2 = f(center + dx);
        f1[jtw] = v1;
        f2[jtw] = v2;
        resg += kWg[j] * (v1 + v2);
        resk += kWgk[jtw] * (v1 + v2);
        resabs += kWgk[jtw] * (std::abs(v1) + std::abs(v2));
    }
    for (int j = 0; j < 5; ++j) {
        const int jtwm1 = 2 * j;
        const double dx = half * kXgk[jtwm1];
        const Complex v1 = f(center - dx);
        const Complex v2 = f(center + dx);
        f1[jtwm1] = v1;
        f2[jtwm1] = v2;
        resk += kWgk[jtwm1] * (v1 + v2);
        resabs += kWgk[jtwm1] * (std::abs(v1) + std::abs(v2));
    }
    const Complex reskh = resk * 0.5;
    double resasc = kWgk[10] * std::abs(fc - reskh);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
    }
    const Complex result = resk * half;
    resabs *= abs_half;
    resasc *= abs_half;
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        err = std::max(50.0 * kEps * resabs, err);
    }
    return {a, b, result, err, resabs};
}

}  // namespace detail

/// Integrates f over the union of consecutive intervals given by
/// `breakpoints` (at least two, increasing).
template <class F>
Result integrate(F&& f, std::span<const double> breakpoints, const Options& opt = {}) {
    using detail::Segment;
    Result out;
    if (breakpoints.size() < 2) return out;

    std::vector<Segment> segs;
    segs.reserve(breakpoints.size() + 64);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (breakpoints[i + 1] == breakpoints[i]) continue;
        segs.push_back(detail::gk21(f, breakpoints[i], breakpoints[i + 1]));
        out.evaluations += 21;
    }

    // Segments whose error is already at their rounding floor are set aside;
    // refining them further cannot reduce the estimate.
    std::vector<Segment> frozen;
    auto totals = [&segs, &frozen]() {
        CompensatedSum<Complex> value;
        CompensatedSum<double> error;
        CompensatedSum<double> absval;
        for (const auto* list : {&segs, &frozen}) {
            for (const auto& s : *list) {
                value.add(s.value);
                error.add(s.error);
                absval.add(s.abs_value);
            }
        }
        return std::tuple{value.value(), error.value(), absval.value()};
    };
    auto by_error = [](const Segment& x, const Segment& y) { return x.error < y.error; };
    std::make_heap(segs.begin(), segs.end(), by_error);

    auto [value, error, absval] = totals();
    while (true) {
        const double target = std::max(opt.abs_tol, opt.rel_tol * std::abs(value));
        if (error <= target) break;
        if (segs.empty()) break;
        if (static_cast<int>(segs.size() + frozen.size()) >= opt.max_segments) {
            out.converged = false;
            break;
        }
        std::pop_heap(segs.begin(), segs.end(), by_error);
        const Segment worst = segs.back();
        segs.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b || worst.error <= 50.0 * kEps * worst.abs_value * 1.0000001) {
            frozen.push_back(worst);
            continue;
        }
        segs.push_back(detail::gk21(f, worst.a, mid));
        std::push_heap(segs.begin(), segs.end(), by_error);
        segs.push_back(detail::gk21(f, mid, worst.b));
        std::push_heap(segs.begin(), segs.end(), by_error);
        out.evaluations += 42;
        std::tie(value, error, absval) = totals();
    }
    out.value = value;
    out.abs_error = error;
    out.abs_integral = absval;
    return out;
}

template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
    const std::array<double, 2> pts{a, b};
    return integrate(std::forward<F>(f), std::span<const double>(pts), opt);
}

}  // namespace weylres::quad
