#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <vector>

namespace adl::comb {

using BigInt = boost::multiprecision::cpp_int;

// Exact tables of S(n,k) (second kind) and c(m,n) (unsigned first kind),
// big-integer so n up to 64 cannot overflow.
class StirlingTables {
  public:
    explicit StirlingTables(int max_n);
    const BigInt& s2(int n, int k) const;  // throws on out-of-range
    const BigInt& c1(int m, int n) const;
    int max_n() const { return max_n_; }

  private:
    int max_n_;
    std::vector<std::vector<BigInt>> s2_, c1_;
};

// Shared table up to n = 64.
const StirlingTables& tables();

BigInt stirling2(int n, int k);
BigInt stirling1_unsigned(int m, int n);

// T_{j,k} = (k-1)! S(j+1,k), 1 <= k <= j+1.
BigInt t_coeff_big(int j, int k);
double t_coeff(int j, int k);

// Fubini numbers: sum_k k! S(n,k).
BigInt fubini(int n);

// Complete exponential Bell polynomial Y_j(x_1..x_j); Y_0 = 1.
double bell_complete(int j, std::span<const double> x);

// binom(a, b) under the sifted-sum convention: binom(-1,0) = 1,
// binom(-1,b) = 0 for b >= 1, 0 when 0 <= a < b, standard otherwise.
int64_t binom_conv(int64_t a, int64_t b);

// Plain binomial for small arguments (0 <= b <= a <= 62).
int64_t binom(int a, int b);

// Coefficients of prod_{m=1}^{M} (t + m) in t; equals c(M+1, k+1) at t^k.
std::vector<BigInt> rising_product_coeffs(int M);

// Integer weights b_t with D_s^j (p^s-1)^{-r} = (-log p)^j sum_t b_t (p^s-1)^{-t},
// t running over [r, r+j]. For r = 1 these are the T_{j,t}.
std::vector<BigInt> deriv_inv_pow(int j, int r);

}  // namespace adl::comb
