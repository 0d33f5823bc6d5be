#include "adl/exact_sums.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "adl/combinatorics.hpp"
#include "adl/common.hpp"
#include "adl/sieve.hpp"

namespace adl::sums {

namespace {

bool passes_sift(uint64_t lpf, double y) {
    return lpf == sieve::kInfinityMark || static_cast<double>(lpf) > y;
}

void validate(const SumRequest& req) {
    if (req.x < 1) throw std::invalid_argument("mkw: x >= 1");
    if (req.k < 1) throw std::invalid_argument("mkw: k >= 1");
    if (req.x > req.ceiling) {
        std::ostringstream os;
        os << "mkw: x = " << req.x << " exceeds the configured ceiling " << req.ceiling;
        throw std::invalid_argument(os.str());
    }
    if (req.residue) {
        auto [m, l] = *req.residue;
        if (m == 0 || std::gcd(m, l) != 1)
            throw std::invalid_argument("mkw: residue filter needs gcd(l, m) = 1");
    }
}

}  // namespace

int64_t mkw_exact(const SumRequest& req) {
    validate(req);
    uint64_t m = 1, l = 0;
    if (req.residue) std::tie(m, l) = *req.residue;
    int64_t total = 0;
    auto consume = [&](const sieve::FactorTable& t) {
        int64_t part = 0;
        for (uint64_t n = t.lo; n < t.hi; ++n) {
            int8_t mu = t.mu_at(n);
            if (mu == 0) continue;
            uint64_t lpf = t.lpf_at(n);
            if (!passes_sift(lpf, req.y)) continue;
            if (m > 1) {
                if (lpf == sieve::kInfinityMark || lpf % m != l) continue;
            }
            int64_t w = comb::binom_conv(static_cast<int64_t>(t.omega_at(n)) - 1, req.k - 1);
            if (w == 0) continue;
            int64_t term = mu > 0 ? w : -w;
            if (__builtin_add_overflow(part, term, &part))
                throw std::overflow_error("mkw: 64-bit accumulator overflow");
        }
        if (__builtin_add_overflow(total, part, &total))
            throw std::overflow_error("mkw: 64-bit accumulator overflow");
    };
    if (req.cache_dir.empty())
        sieve::for_each_segment(1, req.x + 1, req.segment_size, consume);
    else
        sieve::for_each_segment_cached(1, req.x + 1, req.segment_size, req.cache_dir, consume);
    return total;
}

DualityResult duality_check(uint64_t n, int k,
                            const std::function<int64_t(uint64_t)>& f) {
    if (n < 1 || k < 1) throw std::invalid_argument("duality_check: n, k >= 1");
    // distinct prime factors of n, ascending
    std::vector<uint64_t> ps;
    uint64_t mrem = n;
    for (uint64_t p = 2; p * p <= mrem; p += (p == 2 ? 1 : 2)) {
        if (mrem % p == 0) {
            ps.push_back(p);
            while (mrem % p == 0) mrem /= p;
        }
    }
    if (mrem > 1) ps.push_back(mrem);
    int w = static_cast<int>(ps.size());

    int64_t lhs3 = 0, lhs4 = 0;
    for (uint32_t mask = 0; mask < (1u << w); ++mask) {
        int bits = __builtin_popcount(mask);
        int64_t coef = comb::binom_conv(bits - 1, k - 1);
        if (coef == 0) continue;
        int64_t mu = (bits % 2) ? -1 : 1;
        uint64_t small = sieve::kInfinityMark, large = sieve::kInfinityMark;
        for (int i = 0; i < w; ++i)
            if (mask & (1u << i)) {
                if (small == sieve::kInfinityMark) small = ps[i];
                large = ps[i];
            }
        lhs3 += mu * coef * f(small);
        lhs4 += mu * coef * f(large);
    }
    int64_t sign = (k % 2) ? -1 : 1;
    int64_t rhs3 = (w >= k) ? sign * f(ps[w - k]) : 0;  // P_k(n), k-th largest
    int64_t rhs4 = (w >= k) ? sign * f(ps[k - 1]) : 0;  // p_k(n), k-th smallest
    return {lhs3 == rhs3, lhs4 == rhs4};
}

double residue_series_partial(uint64_t m, uint64_t l, uint64_t x, int k) {
    if (m == 0 || std::gcd(m, l) != 1)
        throw std::invalid_argument("residue_series_partial: gcd(l, m) = 1 required");
    Accum acc;
    sieve::for_each_segment(1, x + 1, 0, [&](const sieve::FactorTable& t) {
        for (uint64_t n = t.lo; n < t.hi; ++n) {
            int8_t mu = t.mu_at(n);
            if (mu == 0) continue;
            uint64_t lpf = t.lpf_at(n);
            if (m > 1) {
                if (lpf == sieve::kInfinityMark || lpf % m != l) continue;
            }
            int64_t w = comb::binom_conv(static_cast<int64_t>(t.omega_at(n)) - 1, k - 1);
            if (w == 0) continue;
            acc.add(static_cast<double>(mu > 0 ? w : -w) / static_cast<double>(n));
        }
    });
    return acc.value();
}

double upper_bound_ratio(uint64_t x, double y, int k) {
    double cap = std::pow(static_cast<double>(x), 1.0 / k);
    if (!(y >= 1.9) || y > cap * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "upper_bound_ratio: need 1.9 <= y <= x^(1/k) = " << cap;
        throw std::invalid_argument(os.str());
    }
    SumRequest req;
    req.x = x;
    req.y = y;
    req.k = k;
    int64_t v = mkw_exact(req);
    double llx = std::log(std::log(static_cast<double>(x) + 1.0));
    double denom = static_cast<double>(x) * std::log(y) * std::pow(llx, k - 1);
    return std::abs(static_cast<double>(v)) / denom;
}

}  // namespace adl::sums
