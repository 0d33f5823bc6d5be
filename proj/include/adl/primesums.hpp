#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "adl/common.hpp"

namespace adl::primesums {

enum class MertensKind { M, Q };  // M_N = sum (log p)^N/(p-1), Q_j = sum (log p)^j/p

// Exact finite prime sum over p <= y, compensated summation.
double mertens_sum(MertensKind kind, int power, double y);

// One streaming pass to max(ys): Mertens sums for all powers <= max_power and
// sum log(1-1/p), snapshotted at each threshold. ys must ascend.
struct PrimeGridSums {
    std::vector<double> ys;
    std::vector<std::vector<double>> m;         // m[power][yi]
    std::vector<std::vector<double>> q;         // q[power][yi]
    std::vector<double> log_prod;               // sum_{p<=y} log(1-1/p)
};
PrimeGridSums prime_grid_sums(std::span<const double> ys, int max_power);

// D_s^j (sum_{p>y} 1/(p^s-1) - log zeta(s) + 1) at s = 1, evaluated from the
// convergent subtracted forms; the radius certifies every discarded tail.
// tail_cut = 0 selects the default policy max(1e6, 100 y).
Certified continuation_value(int j, double y, double tail_cut = 0.0);

// D_s^N g(1,y,-1) by the exact finite recursion; all sums run over p <= y.
double g_deriv(int n, double y);

// D_s^N G_i(1,y,-1), i <= 4, N <= 6.
Certified G_deriv(int n, int i, double y, double tail_cut = 0.0);

struct Profile {
    double y = 0;
    double tail_cut = 0;
    std::vector<double> mertens_m;               // M_0..M_maxn
    std::vector<double> mertens_q;               // Q_0..Q_maxn
    std::vector<Certified> cont;                 // continuation values j = 0..maxn
    std::vector<std::vector<Certified>> g;       // g[i][n] = D^n G_i(1,y,-1)
};
Profile profile(double y, int max_n, int max_i, double tail_cut = 0.0);

enum class FitBasis { poly_logy, poly_logy_times_loglog };

struct FitResult {
    int degree = 0;
    std::vector<std::string> basis;    // term names, same order as coeffs
    std::vector<double> coeffs;
    std::vector<double> residuals;     // per sample, value - fit
};

// Least squares against (log y)^n [* (log log y)^j] terms.
// Requires >= degree+3 samples spanning >= 3 decades.
FitResult asymptotic_fit(std::span<const double> ys, std::span<const double> values,
                         FitBasis basis, int degree, int loglog_degree = 0);

// Cross-check oracles (s -> 1+ limits via numerical zeta; not used by any
// production path).
double continuation_value_via_zeta(double y, double s);
double prime_zeta(double s);
// g(1,y,z) from the Euler product truncated at prime_cut; *tail_bound gets a
// certified bound for the dropped factors.
double g_euler_product(double y, double z, double prime_cut, double* tail_bound = nullptr);

}  // namespace adl::primesums
