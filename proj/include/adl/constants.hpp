#pragma once

#include <span>
#include <vector>

namespace adl::constants {

inline constexpr double kPi = 3.14159265358979323846;

// Riemann zeta for real s > 1 by Euler-Maclaurin; ~1e-15 relative, stable
// arbitrarily close to the pole (used by the s -> 1+ cross-check oracles).
double zeta_real(double s);

// zeta(n) for integer n >= 2 (error otherwise).
double zeta_at_integer(int n);

// Stieltjes constants gamma_0..gamma_8 from the limit definition with
// Euler-Maclaurin acceleration.
double stieltjes_const(int n);

double euler_gamma();  // = stieltjes_const(0)

// Gamma^{(j)}(1) = Y_j(-gamma, 1! zeta(2), -2! zeta(3), ...).
double gamma_deriv_at_1(int j);

// Gamma_{m,N} = lim_{z->N+1} (d/dz)^m 1/Gamma(-z), closed form:
// (-1)^N sum_{i odd, i+j+k=m} m!/(i! j!) (-1)^{(i-1)/2} pi^{i-1}
//        Gamma^{(j)}(1) c(N+2, k+1).
// Valid for m <= 12, N <= 8.
double gamma_mn_closed(int m, int N);

// Same sum evaluated against caller-supplied gamma and zeta(2..) values;
// exists so tests can probe the rational-combination structure.
double gamma_mn_closed_custom(int m, int N, double gamma_value,
                              std::span<const double> zeta_values);

struct OracleResult {
    double value;
    double residual;
};

// Finite-difference oracle: Richardson central differences on
// 1/Gamma(-z) = -sin(pi z) Gamma(1+z) / pi, which is pole-free everywhere.
// Throws (with the achieved residual) if the scheme does not converge to tol.
OracleResult gamma_mn_oracle(int m, int N, double tol = 1e-7);

// 1/Gamma(-z) through the reflection identity.
double rgamma_neg(double z);

struct AnalyticConstants {
    double pi;
    double euler_gamma;
    std::vector<double> zeta_int;   // zeta_int[n] = zeta(n), n >= 2
    std::vector<double> stieltjes;  // gamma_0..gamma_8
    int precision_digits;
};

const AnalyticConstants& table();

}  // namespace adl::constants
