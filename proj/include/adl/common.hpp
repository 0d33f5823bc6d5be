#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace adl {

// Neumaier-compensated accumulator for long prime sums.
struct Accum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Value with a certified error radius. Radii propagate through arithmetic as
// outer bounds; they certify tail truncations, not floating-point rounding.
struct Certified {
    double value = 0.0;
    double radius = 0.0;

    Certified() = default;
    Certified(double v, double r = 0.0) : value(v), radius(r) {}

    Certified operator+(const Certified& o) const { return {value + o.value, radius + o.radius}; }
    Certified operator-(const Certified& o) const { return {value - o.value, radius + o.radius}; }
    Certified operator*(const Certified& o) const {
        return {value * o.value,
                std::abs(value) * o.radius + std::abs(o.value) * radius + radius * o.radius};
    }
    Certified operator*(double c) const { return {value * c, radius * std::abs(c)}; }
    Certified& operator+=(const Certified& o) {
        value += o.value;
        radius += o.radius;
        return *this;
    }
};

inline uint64_t isqrt_u64(uint64_t n) {
    if (n == 0) return 0;
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Upper bound for sum_{p>A} (log p)^j / p^t, t >= 2: the integrand is
// monotone decreasing past u = e^{j/(t-1)}, so the sum is bounded by
// int_A^inf (log u)^j u^{-t} du = j! / ((t-1)^{j+1} A^{t-1}) * sum_{i<=j} ((t-1)log A)^i / i!.
inline double log_power_integral_tail(int j, int t, double a) {
    if (a < 2.0) a = 2.0;
    double la = std::log(a);
    double tm1 = static_cast<double>(t - 1);
    double fact = 1.0;
    for (int i = 2; i <= j; ++i) fact *= i;
    double s = 0.0, term = 1.0;
    for (int i = 0; i <= j; ++i) {
        s += term;
        term *= tm1 * la / (i + 1);
    }
    return fact / (std::pow(tm1, j + 1) * std::pow(a, tm1)) * s;
}

}  // namespace adl
