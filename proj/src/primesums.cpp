#include "adl/primesums.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "adl/combinatorics.hpp"
#include "adl/constants.hpp"
#include "adl/sieve.hpp"

namespace adl::primesums {

namespace {

constexpr int kMaxJ = 8;   // highest s-derivative order carried by a pass
constexpr int kMaxT = 12;  // highest (p-1)^{-t} power carried by a pass
constexpr int kMaxN = 6;   // s-derivative ceiling for G
constexpr int kMaxI = 4;   // z-derivative ceiling for G

double default_tail_cut(double y) { return std::max(1e6, 100.0 * y); }

const std::vector<std::vector<double>>& tjk_table() {
    static const auto t = [] {
        std::vector<std::vector<double>> v(kMaxJ + 1);
        for (int j = 0; j <= kMaxJ; ++j) {
            v[j].assign(j + 2, 0.0);
            for (int k = 1; k <= j + 1; ++k) v[j][k] = comb::t_coeff(j, k);
        }
        return v;
    }();
    return t;
}

// Accumulated sums over one (head, tail) prime pass.
struct RangeSums {
    std::vector<double> q;               // head: Q_j = sum_{p<=y} (log p)^j / p
    std::vector<double> a;               // head: a[j] = sum (-log p)^{j+1} sum_k T_{j,k}/(p-1)^k
    double log_prod = 0.0;               // head: sum log(1 - 1/p)
    std::vector<double> ppm1;            // tail: sum (log p)^j / (p (p-1))
    std::vector<std::vector<double>> b;  // tail: b[j][t] = sum (log p)^j / (p-1)^t, t >= 2
};

RangeSums scan_ranges(double y, double tail_cut) {
    RangeSums out;
    std::vector<Accum> q(kMaxJ + 1), a(kMaxJ + 1), ppm1(kMaxJ + 1);
    std::vector<std::vector<Accum>> b(kMaxJ + 1, std::vector<Accum>(kMaxT + 1));
    Accum lp_acc;
    const auto& tjk = tjk_table();

    uint64_t hi = static_cast<uint64_t>(std::max(y, tail_cut)) + 1;
    sieve::for_each_prime(2, hi, [&](uint64_t pu) {
        double p = static_cast<double>(pu);
        double lp = std::log(p);
        double lpw[kMaxJ + 2];
        lpw[0] = 1.0;
        for (int j = 1; j <= kMaxJ + 1; ++j) lpw[j] = lpw[j - 1] * lp;
        if (p <= y) {
            for (int j = 0; j <= kMaxJ; ++j) q[j].add(lpw[j] / p);
            lp_acc.add(std::log1p(-1.0 / p));
            double inv = 1.0 / (p - 1.0);
            double invk[kMaxJ + 2];
            invk[0] = 1.0;
            for (int k = 1; k <= kMaxJ + 1; ++k) invk[k] = invk[k - 1] * inv;
            for (int j = 0; j <= kMaxJ; ++j) {
                double inner = 0.0;
                for (int k = 1; k <= j + 1; ++k) inner += tjk[j][k] * invk[k];
                double sgn = (j % 2 == 0) ? -1.0 : 1.0;  // (-log p)^{j+1}
                a[j].add(sgn * lpw[j + 1] * inner);
            }
        } else if (p <= tail_cut) {
            double inv = 1.0 / (p - 1.0);
            for (int j = 0; j <= kMaxJ; ++j) ppm1[j].add(lpw[j] / (p * (p - 1.0)));
            double invt = inv;
            for (int t = 2; t <= kMaxT; ++t) {
                invt *= inv;
                for (int j = 0; j <= kMaxJ; ++j) b[j][t].add(lpw[j] * invt);
            }
        }
    });
    out.q.resize(kMaxJ + 1);
    out.a.resize(kMaxJ + 1);
    out.ppm1.resize(kMaxJ + 1);
    out.b.assign(kMaxJ + 1, std::vector<double>(kMaxT + 1, 0.0));
    for (int j = 0; j <= kMaxJ; ++j) {
        out.q[j] = q[j].value();
        out.a[j] = a[j].value();
        out.ppm1[j] = ppm1[j].value();
        for (int t = 2; t <= kMaxT; ++t) out.b[j][t] = b[j][t].value();
    }
    out.log_prod = lp_acc.value();
    return out;
}

// sum_p sum_{m>=2} (-m log p)^j / (p^m m), y-independent, cached.
Certified prime_power_sum(int j) {
    static std::vector<Certified> cache(kMaxJ + 1, Certified(0.0, -1.0));
    if (cache[j].radius >= 0.0) return cache[j];
    const double pcut = 1e5;
    Accum acc;  // accumulates sum m^{j-1} (log p)^j p^{-m}, sign applied at the end
    double mtail = 0.0;
    sieve::for_each_prime(2, static_cast<uint64_t>(pcut) + 1, [&](uint64_t pu) {
        double p = static_cast<double>(pu);
        double lpj = std::pow(std::log(p), j);
        double pm = p * p;
        double last = 0.0;
        for (int m = 2; m <= 400; ++m) {
            last = lpj * std::pow(static_cast<double>(m), j - 1) / pm;
            acc.add(last);
            pm *= p;
            if (last < 1e-24) break;
        }
        mtail += 4.0 * last;  // geometric remainder after the break
    });
    // p-tail: sum_{m>=2} m^{j-1} p^{-m} <= 1.1 max(1, 2^{j-1}) p^{-2} for p >= 1e5
    double cj = 1.1 * std::max(1.0, std::pow(2.0, j - 1));
    double ptail = cj * log_power_integral_tail(j, 2, pcut - 1.0);
    double sj = (j % 2 == 0) ? 1.0 : -1.0;
    cache[j] = Certified(sj * acc.value(), mtail + ptail);
    return cache[j];
}

double tail_bound_b(int j, int t, double cut) {
    // sum_{p>cut} (log p)^j / (p-1)^t <= 2^t int_{cut-1} (log u)^j u^{-t} du
    return std::pow(2.0, t) * log_power_integral_tail(j, t, cut - 1.0);
}

struct Workspace {
    double y, tail_cut;
    RangeSums s;
    std::vector<Certified> cont;  // j = 0..kMaxN
    std::vector<double> gd;       // D^n g(1,y,-1), n = 0..kMaxN
    std::map<std::pair<int, int>, Certified> memo;

    Workspace(double y_, double cut) : y(y_), tail_cut(cut), s(scan_ranges(y_, cut)) {
        cont.resize(kMaxN + 1);
        for (int j = 0; j <= kMaxN; ++j) cont[j] = continuation(j);
        gd.resize(kMaxN + 1);
        double g0 = -std::exp(-s.log_prod);
        gd[0] = g0;
        for (int n = 1; n <= kMaxN; ++n) {
            double v = 0.0;
            for (int j = 0; j < n; ++j)
                v += static_cast<double>(comb::binom(n - 1, j)) * s.a[j] * gd[n - 1 - j];
            gd[n] = v;
        }
    }

    Certified continuation(int j) const {
        const auto& tjk = tjk_table();
        Certified ppow = prime_power_sum(j);
        if (j == 0) {
            double v = 1.0 - s.q[0] + s.ppm1[0] - ppow.value;
            double r = ppow.radius + 2.0 * log_power_integral_tail(0, 2, tail_cut - 1.0);
            return {v, r};
        }
        double sj = (j % 2 == 0) ? 1.0 : -1.0;  // (-1)^j
        double v = -sj * s.q[j];
        v += sj * s.ppm1[j];
        double tsum = 0.0, tcoef = 0.0;
        for (int k = 2; k <= j + 1; ++k) {
            tsum += tjk[j][k] * s.b[j][k];
            tcoef += tjk[j][k];
        }
        v += sj * tsum;
        v -= ppow.value;
        double r = ppow.radius;
        r += 2.0 * log_power_integral_tail(j, 2, tail_cut - 1.0);          // 1/(p(p-1)) tail
        r += tcoef * 4.0 * log_power_integral_tail(j, 2, tail_cut - 1.0);  // T-term tails
        return {v, r};
    }

    // D_s^j (1 + (-1)^{kk-2-ip} sum_{p>y} (p^s-1)^{-(kk-1-ip)}) at s=1
    Certified inner(int j, int kk, int ip) const {
        int r = kk - 1 - ip;
        double sgn = ((kk - 2 - ip) % 2 == 0) ? 1.0 : -1.0;
        if (j == 0) {
            double v = 1.0 + sgn * s.b[0][r];
            return {v, tail_bound_b(0, r, tail_cut)};
        }
        auto bw = comb::deriv_inv_pow(j, r);
        double sj = (j % 2 == 0) ? 1.0 : -1.0;  // (-log p)^j at s=1
        double v = 0.0, rad = 0.0;
        for (int t = r; t <= r + j; ++t) {
            double w = static_cast<double>(bw[t - r]);
            v += w * s.b[j][t];
            rad += w * tail_bound_b(j, t, tail_cut);
        }
        return {sgn * sj * v, rad};
    }

    Certified G(int i, int n) {
        if (i == 0) return {gd[n], 0.0};
        auto key = std::make_pair(i, n);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int kk = i + 1;
        Certified total(0.0, 0.0);
        for (int j = 0; j <= n; ++j) {
            double c = static_cast<double>(comb::binom(n, j));
            total += (cont[j] * G(i - 1, n - j)) * c;
            for (int ip = 0; ip <= kk - 3; ++ip) {
                double w = c * static_cast<double>(comb::binom(kk - 2, ip));
                for (int f = 2; f <= kk - 2 - ip; ++f) w *= f;  // (kk-2-ip)!
                total += (inner(j, kk, ip) * G(ip, n - j)) * w;
            }
        }
        memo[key] = total;
        return total;
    }
};

}  // namespace

double mertens_sum(MertensKind kind, int power, double y) {
    if (!(y >= 1.9)) throw std::invalid_argument("mertens_sum: y >= 1.9");
    if (power < 0 || power > kMaxJ) throw std::invalid_argument("mertens_sum: power in 0..8");
    Accum acc;
    sieve::for_each_prime(2, static_cast<uint64_t>(y) + 1, [&](uint64_t pu) {
        double p = static_cast<double>(pu);
        double t = power == 0 ? 1.0 : std::pow(std::log(p), power);
        acc.add(kind == MertensKind::M ? t / (p - 1.0) : t / p);
    });
    return acc.value();
}

PrimeGridSums prime_grid_sums(std::span<const double> ys, int max_power) {
    if (ys.empty()) throw std::invalid_argument("prime_grid_sums: empty grid");
    for (size_t i = 1; i < ys.size(); ++i)
        if (!(ys[i] > ys[i - 1])) throw std::invalid_argument("prime_grid_sums: ys must ascend");
    PrimeGridSums g;
    g.ys.assign(ys.begin(), ys.end());
    g.m.assign(max_power + 1, {});
    g.q.assign(max_power + 1, {});
    std::vector<Accum> m(max_power + 1), q(max_power + 1);
    Accum lp_acc;
    size_t next = 0;
    auto snapshot = [&] {
        for (int k = 0; k <= max_power; ++k) {
            g.m[k].push_back(m[k].value());
            g.q[k].push_back(q[k].value());
        }
        g.log_prod.push_back(lp_acc.value());
    };
    sieve::for_each_prime(2, static_cast<uint64_t>(ys.back()) + 1, [&](uint64_t pu) {
        double p = static_cast<double>(pu);
        while (next < g.ys.size() && p > g.ys[next]) {
            snapshot();
            ++next;
        }
        double lp = std::log(p), t = 1.0;
        for (int k = 0; k <= max_power; ++k) {
            m[k].add(t / (p - 1.0));
            q[k].add(t / p);
            t *= lp;
        }
        lp_acc.add(std::log1p(-1.0 / p));
    });
    while (next < g.ys.size()) {
        snapshot();
        ++next;
    }
    return g;
}

Certified continuation_value(int j, double y, double tail_cut) {
    if (j < 0 || j > kMaxN) throw std::invalid_argument("continuation_value: j in 0..6");
    if (!(y >= 1.9)) throw std::invalid_argument("continuation_value: y >= 1.9");
    if (tail_cut == 0.0) tail_cut = default_tail_cut(y);
    if (!(tail_cut >= y)) throw std::invalid_argument("continuation_value: tail_cut >= y");
    Workspace w(y, tail_cut);
    return w.cont[j];
}

double g_deriv(int n, double y) {
    if (n < 0 || n > kMaxJ) throw std::invalid_argument("g_deriv: n in 0..8");
    if (!(y >= 1.9)) throw std::invalid_argument("g_deriv: y >= 1.9");
    std::vector<Accum> a(n > 0 ? n : 1);
    Accum lp_acc;
    const auto& tjk = tjk_table();
    sieve::for_each_prime(2, static_cast<uint64_t>(y) + 1, [&](uint64_t pu) {
        double p = static_cast<double>(pu);
        double lp = std::log(p);
        lp_acc.add(std::log1p(-1.0 / p));
        double inv = 1.0 / (p - 1.0);
        for (int j = 0; j < n; ++j) {
            double inner = 0.0, invk = inv;
            for (int k = 1; k <= j + 1; ++k) {
                inner += tjk[j][k] * invk;
                invk *= inv;
            }
            double sgn = (j % 2 == 0) ? -1.0 : 1.0;
            a[j].add(sgn * std::pow(lp, j + 1) * inner);
        }
    });
    std::vector<double> gd(n + 1);
    gd[0] = -std::exp(-lp_acc.value());
    for (int m = 1; m <= n; ++m) {
        double v = 0.0;
        for (int j = 0; j < m; ++j)
            v += static_cast<double>(comb::binom(m - 1, j)) * a[j].value() * gd[m - 1 - j];
        gd[m] = v;
    }
    return gd[n];
}

Certified G_deriv(int n, int i, double y, double tail_cut) {
    if (n < 0 || n > kMaxN) throw std::invalid_argument("G_deriv: n in 0..6");
    if (i < 0 || i > kMaxI) throw std::invalid_argument("G_deriv: i in 0..4");
    if (!(y >= 1.9)) throw std::invalid_argument("G_deriv: y >= 1.9");
    if (tail_cut == 0.0) tail_cut = default_tail_cut(y);
    Workspace w(y, tail_cut);
    return w.G(i, n);
}

Profile profile(double y, int max_n, int max_i, double tail_cut) {
    if (max_n < 0 || max_n > kMaxN || max_i < 0 || max_i > kMaxI)
        throw std::invalid_argument("profile: need max_n <= 6, max_i <= 4");
    if (tail_cut == 0.0) tail_cut = default_tail_cut(y);
    Workspace w(y, tail_cut);
    Profile pr;
    pr.y = y;
    pr.tail_cut = tail_cut;
    for (int j = 0; j <= max_n; ++j) {
        pr.mertens_m.push_back(mertens_sum(MertensKind::M, j, y));
        pr.mertens_q.push_back(w.s.q[j]);
        pr.cont.push_back(w.cont[j]);
    }
    pr.g.assign(max_i + 1, {});
    for (int i = 0; i <= max_i; ++i)
        for (int j = 0; j <= max_n; ++j) pr.g[i].push_back(w.G(i, j));
    return pr;
}

FitResult asymptotic_fit(std::span<const double> ys, std::span<const double> values,
                         FitBasis basis, int degree, int loglog_degree) {
    if (ys.size() != values.size()) throw std::invalid_argument("asymptotic_fit: size mismatch");
    if (basis == FitBasis::poly_logy) loglog_degree = 0;
    int cols = (degree + 1) * (loglog_degree + 1);
    if (static_cast<int>(ys.size()) < degree + 3)
        throw std::invalid_argument("asymptotic_fit: need >= degree+3 samples");
    double lo = *std::min_element(ys.begin(), ys.end());
    double hi = *std::max_element(ys.begin(), ys.end());
    if (!(hi / lo >= 999.0))
        throw std::invalid_argument("asymptotic_fit: samples must span >= 3 decades of y");

    Eigen::MatrixXd a(ys.size(), cols);
    Eigen::VectorXd v(ys.size());
    FitResult res;
    res.degree = degree;
    for (int n = 0; n <= degree; ++n)
        for (int j = 0; j <= loglog_degree; ++j) {
            std::ostringstream os;
            os << "(log y)^" << n;
            if (j) os << "*(llog y)^" << j;
            res.basis.push_back(os.str());
        }
    for (size_t r = 0; r < ys.size(); ++r) {
        double ly = std::log(ys[r]), lly = std::log(std::log(ys[r]));
        int c = 0;
        for (int n = 0; n <= degree; ++n)
            for (int j = 0; j <= loglog_degree; ++j)
                a(r, c++) = std::pow(ly, n) * std::pow(lly, j);
        v(r) = values[r];
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < cols)
        throw std::runtime_error(
            "asymptotic_fit: basis is ill-conditioned on these samples; widen the y span");
    Eigen::VectorXd c = qr.solve(v);
    Eigen::VectorXd resid = v - a * c;
    res.coeffs.assign(c.data(), c.data() + c.size());
    res.residuals.assign(resid.data(), resid.data() + resid.size());
    return res;
}

// ---------------------------------------------------------------------------
// cross-check oracles
// ---------------------------------------------------------------------------

double prime_zeta(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("prime_zeta: s > 1");
    static const auto mob = [] {
        std::vector<int> mu(101, 1);
        for (int p = 2; p <= 100; ++p) {
            bool prime = true;
            for (int q = 2; q * q <= p; ++q)
                if (p % q == 0) prime = false;
            if (!prime) continue;
            for (int m = p; m <= 100; m += p) mu[m] *= -1;
            for (int m = p * p; m <= 100; m += p * p) mu[m] = 0;
        }
        return mu;
    }();
    double total = 0.0;
    for (int k = 1; k <= 100; ++k) {
        if (k * s > 80.0) break;
        if (mob[k] == 0) continue;
        total += mob[k] * std::log(constants::zeta_real(k * s)) / k;
    }
    return total;
}

double continuation_value_via_zeta(double y, double s) {
    if (!(s > 1.0)) throw std::invalid_argument("continuation_value_via_zeta: s > 1");
    std::vector<double> head;  // primes <= y
    sieve::for_each_prime(2, static_cast<uint64_t>(std::max(y, 2.0)) + 1,
                          [&](uint64_t p) { if (p <= y) head.push_back(static_cast<double>(p)); });
    double total = 0.0;
    for (int m = 1; m <= 200; ++m) {
        if (m * s > 80.0) break;
        double t = prime_zeta(m * s);
        for (double p : head) t -= std::pow(p, -m * s);
        total += t;
        if (m > 2 && std::abs(t) < 1e-17) break;
    }
    return total - std::log(constants::zeta_real(s)) + 1.0;
}

double g_euler_product(double y, double z, double prime_cut, double* tail_bound) {
    if (std::abs(z) > 1.5 || z == 0.0)
        throw std::invalid_argument("g_euler_product: need 0 < |z| <= 1.5");
    Accum lg;
    sieve::for_each_prime(2, static_cast<uint64_t>(prime_cut) + 1, [&](uint64_t pu) {
        double p = static_cast<double>(pu);
        if (p <= y)
            lg.add(z * std::log1p(-1.0 / p));
        else
            lg.add(std::log1p(z / p) + z * std::log1p(-1.0 / p));
    });
    double g = std::exp(lg.value()) / z;
    if (tail_bound) {
        double az = std::abs(z);
        double t2 = log_power_integral_tail(0, 2, prime_cut - 1.0);
        double t3 = log_power_integral_tail(0, 3, prime_cut - 1.0);
        double logtail = 0.5 * std::abs(z * z + z) * t2 + 0.6 * (az * az * az + az) * t3;
        *tail_bound = std::abs(g) * (std::exp(logtail) - 1.0);
    }
    return g;
}

}  // namespace adl::primesums
