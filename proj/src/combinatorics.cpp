#include "adl/combinatorics.hpp"

#include <stdexcept>

namespace adl::comb {

StirlingTables::StirlingTables(int max_n) : max_n_(max_n) {
    if (max_n < 0 || max_n > 256)
        throw std::invalid_argument("StirlingTables: max_n out of range");
    s2_.assign(max_n + 1, std::vector<BigInt>(max_n + 1, 0));
    c1_.assign(max_n + 1, std::vector<BigInt>(max_n + 1, 0));
    s2_[0][0] = 1;
    c1_[0][0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 1; k <= n; ++k) {
            s2_[n][k] = s2_[n - 1][k - 1] + k * s2_[n - 1][k];
            c1_[n][k] = c1_[n - 1][k - 1] + (n - 1) * c1_[n - 1][k];
        }
    }
}

const BigInt& StirlingTables::s2(int n, int k) const {
    if (n < 0 || n > max_n_ || k < 0 || k > n)
        throw std::out_of_range("stirling2: indices out of range (need 0 <= k <= n <= maxN)");
    return s2_[n][k];
}

const BigInt& StirlingTables::c1(int m, int n) const {
    if (m < 0 || m > max_n_ || n < 0 || n > m)
        throw std::out_of_range("stirling1_unsigned: indices out of range (need 0 <= n <= m <= maxN)");
    return c1_[m][n];
}

const StirlingTables& tables() {
    static const StirlingTables t(64);
    return t;
}

BigInt stirling2(int n, int k) { return tables().s2(n, k); }
BigInt stirling1_unsigned(int m, int n) { return tables().c1(m, n); }

BigInt t_coeff_big(int j, int k) {
    if (j < 0 || k < 1 || k > j + 1)
        throw std::out_of_range("t_coeff: need 1 <= k <= j+1");
    BigInt f = 1;
    for (int i = 2; i <= k - 1; ++i) f *= i;
    return f * tables().s2(j + 1, k);
}

double t_coeff(int j, int k) { return static_cast<double>(t_coeff_big(j, k)); }

BigInt fubini(int n) {
    if (n < 0) throw std::invalid_argument("fubini: n >= 0");
    BigInt acc = 0, kfact = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) kfact *= k;
        acc += kfact * tables().s2(n, k);
    }
    return acc;
}

double bell_complete(int j, std::span<const double> x) {
    if (j < 0) throw std::invalid_argument("bell_complete: j >= 0");
    if (static_cast<int>(x.size()) < j)
        throw std::invalid_argument("bell_complete: needs x_1..x_j");
    // Y_{n+1} = sum_{i=0}^{n} binom(n,i) Y_{n-i} x_{i+1}
    std::vector<double> y(j + 1, 0.0);
    y[0] = 1.0;
    for (int n = 0; n < j; ++n) {
        double acc = 0.0, b = 1.0;
        for (int i = 0; i <= n; ++i) {
            acc += b * y[n - i] * x[i];
            b = b * (n - i) / (i + 1);
        }
        y[n + 1] = acc;
    }
    return y[j];
}

int64_t binom(int a, int b) {
    if (b < 0 || b > a || a > 62) throw std::out_of_range("binom: need 0 <= b <= a <= 62");
    static const auto table = [] {
        std::vector<std::vector<int64_t>> t(63);
        for (int n = 0; n < 63; ++n) {
            t[n].assign(n + 1, 1);
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table[a][b];
}

int64_t binom_conv(int64_t a, int64_t b) {
    if (b < 0) throw std::invalid_argument("binom_conv: b >= 0");
    if (a < 0) return b == 0 ? 1 : 0;
    if (a < b) return 0;
    return binom(static_cast<int>(a), static_cast<int>(b));
}

std::vector<BigInt> rising_product_coeffs(int M) {
    std::vector<BigInt> c{1};  // constant polynomial 1
    for (int m = 1; m <= M; ++m) {
        std::vector<BigInt> nxt(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            nxt[i] += c[i] * m;
            nxt[i + 1] += c[i];
        }
        c = std::move(nxt);
    }
    return c;
}

std::vector<BigInt> deriv_inv_pow(int j, int r) {
    if (j < 0 || r < 1) throw std::invalid_argument("deriv_inv_pow: j >= 0, r >= 1");
    // Each D_s maps (p^s-1)^{-t} to -log p [t (p^s-1)^{-t} + t (p^s-1)^{-t-1}].
    std::vector<BigInt> b(j + 1, 0);  // index t-r
    b[0] = 1;
    for (int step = 0; step < j; ++step) {
        std::vector<BigInt> nxt(j + 1, 0);
        for (int i = 0; i <= step; ++i) {
            BigInt w = b[i] * (r + i);
            nxt[i] += w;
            nxt[i + 1] += w;
        }
        b = std::move(nxt);
    }
    return b;
}

}  // namespace adl::comb
