#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

namespace adl::sums {

struct SumRequest {
    uint64_t x = 0;
    double y = 1.9;
    int k = 1;
    std::optional<std::pair<uint64_t, uint64_t>> residue;  // (m, l), gcd(l, m) = 1
    uint64_t ceiling = 1'000'000'000;
    uint64_t segment_size = 0;  // 0 = default
    std::string cache_dir;      // empty = no cache
};

// Exact M_{k,omega}(x,y) = sum_{n<=x, p_1(n)>y} mu(n) binom(omega(n)-1, k-1).
// n = 1 enters through the binomial convention (weight 1 at k = 1, else 0).
// A residue filter restricts to p_1(n) = l (mod m); m = 1 means no filter.
int64_t mkw_exact(const SumRequest& req);

struct DualityResult {
    bool third_ok;   // f(p_1(d)) inside, (-1)^k f(P_k(n)) outside
    bool fourth_ok;  // f(P_1(d)) inside, (-1)^k f(p_k(n)) outside
};

// Exact divisor-sum check of both duality relations for one n. f must map the
// infinity sentinel (and thus d = 1) to 0.
DualityResult duality_check(uint64_t n, int k, const std::function<int64_t(uint64_t)>& f);

// sum_{n<=x, p_1(n)=l (m)} mu(n) binom(omega(n)-1,k-1) / n, compensated.
double residue_series_partial(uint64_t m, uint64_t l, uint64_t x, int k);

// |M_{k,omega}(x,y)| / (x log y (log log(x+1))^{k-1}); reported, not asserted.
double upper_bound_ratio(uint64_t x, double y, int k);

}  // namespace adl::sums
