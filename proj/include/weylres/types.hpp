#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <type_traits>

namespace weylres {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

inline bool is_finite(Complex v) noexcept {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

/// Compensated (Neumaier) accumulator; used wherever long alternating or
/// oscillatory sums are formed.
template <class T>
class CompensatedSum {
public:
    void add(T x) noexcept {
        T t = sum_ + x;
        compensate(t, x);
        sum_ = t;
    }
    T value() const noexcept { return sum_ + comp_; }

private:
    void compensate(const T& t, const T& x) noexcept {
        if constexpr (std::is_same_v<T, double>) {
            comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
        } else {
            auto part = [](double s, double xx, double tt) {
                return std::abs(s) >= std::abs(xx) ? (s - tt) + xx : (xx - tt) + s;
            };
            comp_ += T(part(sum_.real(), x.real(), t.real()), part(sum_.imag(), x.imag(), t.imag()));
        }
    }

    T sum_{};
    T comp_{};
};

}  // namespace weylres
