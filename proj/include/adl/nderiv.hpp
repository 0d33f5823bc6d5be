#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <vector>

namespace adl {

struct DerivResult {
    double value = 0.0;
    double residual = 0.0;  // spread of the last extrapolation step
};

// Order-m derivative at x0 by iterated central differences with Richardson
// extrapolation (Neville tableau in h^2). Evaluations run in long double;
// on x86-64 that buys ~3 extra digits, which the order>=4 oracles need.
inline DerivResult nderiv_central(const std::function<long double(long double)>& f,
                                  long double x0, int m, long double h0 = 0.5L,
                                  int levels = 7) {
    if (m == 0) {
        double v = static_cast<double>(f(x0));
        return {v, 0.0};
    }
    std::vector<long double> binom(m + 1);
    binom[0] = 1.0L;
    for (int r = 1; r <= m; ++r) binom[r] = binom[r - 1] * (m - r + 1) / r;

    auto stencil = [&](long double h) {
        long double acc = 0.0L;
        for (int r = 0; r <= m; ++r) {
            long double node = x0 + (m * 0.5L - r) * h;
            long double c = binom[r];
            acc += ((r & 1) ? -c : c) * f(node);
        }
        long double hm = 1.0L;
        for (int i = 0; i < m; ++i) hm *= h;
        return acc / hm;
    };

    std::vector<long double> row(levels);
    long double h = h0;
    for (int l = 0; l < levels; ++l, h *= 0.5L) row[l] = stencil(h);

    // Neville in h^2: T[l][k] = T[l][k-1] + (T[l][k-1]-T[l-1][k-1])/(4^k-1)
    long double best = row[levels - 1];
    long double best_res = std::abs(row[levels - 1] - row[levels - 2]);
    std::vector<long double> prev = row, cur(levels);
    for (int k = 1; k < levels; ++k) {
        long double pow4 = std::pow(4.0L, k);
        for (int l = k; l < levels; ++l)
            cur[l] = prev[l] + (prev[l] - prev[l - 1]) / (pow4 - 1.0L);
        for (int l = k; l < levels; ++l) {
            long double res = std::abs(cur[l] - prev[l - 1]);
            if (res < best_res) {
                best_res = res;
                best = cur[l];
            }
        }
        std::swap(prev, cur);
    }
    return {static_cast<double>(best), static_cast<double>(best_res)};
}

}  // namespace adl
