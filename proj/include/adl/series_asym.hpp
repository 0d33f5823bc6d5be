#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "adl/common.hpp"

namespace adl::series {

// Truncated double expansion in u = s-1 and ell = log(s-1): coefficient
// matrix c[i][j] for u^i ell^j. Multiplication truncates u-degree at imax;
// ell-degree is additive and must stay within jmax.
class BiSeries {
  public:
    BiSeries(int imax, int jmax);
    static BiSeries from_u_coeffs(std::span<const double> c, int imax, int jmax);

    int imax() const { return imax_; }
    int jmax() const { return jmax_; }
    double at(int i, int j) const;
    void set(int i, int j, double v);

    BiSeries operator+(const BiSeries& o) const;
    BiSeries operator-(const BiSeries& o) const;
    BiSeries operator*(const BiSeries& o) const;
    BiSeries scaled(double c) const;
    BiSeries pow(int e) const;

    // pure-u helpers (throw if any ell-coefficient is nonzero)
    BiSeries log_unit() const;      // log of series with constant term 1
    BiSeries exp_pure() const;      // exp of series with constant term 0
    BiSeries inverse_unit() const;  // 1/series with constant term 1
    double eval_u(double u) const;
    double eval(double u, double ell) const;

  private:
    int imax_, jmax_;
    std::vector<double> c_;  // (imax+1) x (jmax+1), row-major in i
};

// (s-1) zeta(s) = 1 + gamma u - gamma_1 u^2 + ... as a pure u-series.
BiSeries zeta_series(int order);
// Delta(s) = log((s-1) zeta(s)); Delta(1) = 0.
BiSeries delta_series(int order);
// 1/(s zeta(s)) = u (1 - (1+gamma) u + ...).
BiSeries inv_s_zeta_series(int order);

// H(i,j) := (1/2 pi i) oint w^i (log w)^j e^w dw = Gamma_{j, i-1}.
double hankel_coeff(int i, int j);

struct PhiTable {
    double y = 0;
    int k = 1;
    int nprime = 0;
    // phi[i][j], 0 <= i <= nprime, 0 <= j <= k-1: coefficient of u^i ell^j in
    // (-1)^k/((k-1)! s zeta(s)) (D_z)^{k-1} f(s,y,z)|_{z=-1}, with
    // log zeta expanded as Delta - ell. The i = 0 row vanishes identically.
    std::vector<std::vector<double>> phi;
    std::vector<std::vector<double>> radius;
};

PhiTable phi_table(double y, int k, int nprime, double tail_cut = 0.0);

struct MainTermParams {
    double x = 0;
    double y = 1.9;
    int k = 2;
    int order = 1;  // N
};

// (x/log x) sum_{1<=i<=N} sum_{1<=j<=J<=k-1} phi[i][J] binom(J,j) (-1)^{J-j}
//   (log log x)^{J-j} H(i,j) / (log x)^i.     Zero when k = 1.
double main_term(const MainTermParams& p, const PhiTable& table);
double main_term(const MainTermParams& p);

struct Window {
    double y0 = 1.0;
    double power = 1.0;
    double epsilon = 0.1;
};

struct CompareRow {
    double x;
    int64_t exact;
    double main;
    double normalized_residual;
};

// Exact sums vs main term over an x grid; normalized_residual =
// |exact - main| log x / (x (log log(x+1))^{k-1} (log y/log x)^{N+1}).
std::vector<CompareRow> compare(std::span<const double> xs, double y, int k, int order,
                                const Window& w = {});

}  // namespace adl::series
