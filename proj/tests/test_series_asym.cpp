#include "adl/series_asym.hpp"

#include <cmath>
#include <stdexcept>
#include <random>

#include "adl/combinatorics.hpp"
#include "adl/constants.hpp"
#include "adl/exact_sums.hpp"
#include "adl/hankel.hpp"
#include "adl/primesums.hpp"
#include "adl/sieve.hpp"
#include "doctest.h"

using namespace adl::series;
namespace cst = adl::constants;

namespace {

// g(s,y,z) from the Euler product at real s > 1 (test-side; the library only
// needs s = 1)
double g_s(double s, double y, double z, double cut = 1e6) {
    double lg = 0.0;
    adl::sieve::for_each_prime(2, static_cast<uint64_t>(cut) + 1, [&](uint64_t pu) {
        double ps = std::pow(static_cast<double>(pu), s);
        if (static_cast<double>(pu) <= y)
            lg += z * std::log1p(-1.0 / ps);
        else
            lg += std::log1p(z / ps) + z * std::log1p(-1.0 / ps);
    });
    return std::exp(lg) / z;
}

double Gi_fd_s(double s, double y, int i) {
    if (i == 0) return g_s(s, y, -1.0);
    auto stencil = [&](double h) {
        double acc = 0.0;
        for (int r = 0; r <= i; ++r) {
            double node = -1.0 + (i * 0.5 - r) * h;
            double c = adl::comb::binom(i, r);
            acc += ((r % 2) ? -c : c) * g_s(s, y, node);
        }
        return acc / std::pow(h, i);
    };
    double a = stencil(0.04), b = stencil(0.02), c = stencil(0.01);
    double r1 = (4 * b - a) / 3, r2 = (4 * c - b) / 3;
    return (16 * r2 - r1) / 15;
}

BiSeries random_series(std::mt19937_64& rng, int imax, int jmax, int jdeg) {
    std::uniform_real_distribution<double> d(-0.4, 0.4);
    BiSeries s(imax, jmax);
    for (int i = 0; i <= imax; ++i)
        for (int j = 0; j <= jdeg; ++j) s.set(i, j, d(rng));
    return s;
}

}  // namespace

TEST_CASE("zeta series: coefficients and cross-evaluation") {
    auto z = zeta_series(8);
    CHECK(z.at(0, 0) == 1.0);
    CHECK(z.at(1, 0) == doctest::Approx(cst::euler_gamma()).epsilon(1e-13));
    double v = z.eval_u(0.1);
    CHECK(v == doctest::Approx(0.1 * cst::zeta_real(1.1)).epsilon(1e-6));
}

TEST_CASE("delta series: log of the unit series") {
    auto d = delta_series(8);
    CHECK(d.at(0, 0) == 0.0);
    CHECK(d.at(1, 0) == doctest::Approx(cst::euler_gamma()).epsilon(1e-13));
    CHECK(d.eval_u(0.01) ==
          doctest::Approx(std::log(0.01 * cst::zeta_real(1.01))).epsilon(1e-9));
    // exp(delta) reproduces the zeta series to truncation order
    auto back = d.exp_pure();
    auto z = zeta_series(8);
    for (int i = 0; i <= 8; ++i)
        CHECK(back.at(i, 0) == doctest::Approx(z.at(i, 0)).epsilon(1e-12));
}

TEST_CASE("1/(s zeta) series") {
    auto inv = inv_s_zeta_series(8);
    CHECK(inv.at(0, 0) == 0.0);
    CHECK(inv.at(1, 0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(inv.eval_u(0.05) ==
          doctest::Approx(1.0 / (1.05 * cst::zeta_real(1.05))).epsilon(1e-6));
}

TEST_CASE("series engine laws") {
    std::mt19937_64 rng(987654);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_series(rng, 6, 4, 1);
        auto b = random_series(rng, 6, 4, 1);
        auto c = random_series(rng, 6, 4, 2);
        auto lhs = (a * b) * c;
        auto rhs = a * (b * c);
        for (int i = 0; i <= 6; ++i)
            for (int j = 0; j <= 4; ++j)
                REQUIRE(lhs.at(i, j) == doctest::Approx(rhs.at(i, j)).epsilon(1e-12));
    }
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_series(rng, 7, 0, 0);
        s.set(0, 0, 0.0);
        BiSeries one_plus = s;
        one_plus.set(0, 0, 1.0);
        auto back = one_plus.log_unit().exp_pure();
        for (int i = 0; i <= 7; ++i)
            REQUIRE(back.at(i, 0) == doctest::Approx(one_plus.at(i, 0)).epsilon(1e-11));
    }
}

TEST_CASE("phi table shape and low-order entries") {
    auto t = phi_table(10.0, 2, 3);
    REQUIRE(t.phi.size() == 4);     // i = 0..3
    REQUIRE(t.phi[0].size() == 2);  // j = 0..k-1
    // the 1/(s zeta) factor kills the i = 0 row
    CHECK(t.phi[0][0] == 0.0);
    CHECK(t.phi[0][1] == 0.0);
    // phi[1][1] = -g(1,y,-1): the only u ell source is u * (-ell) * G_0
    CHECK(t.phi[1][1] == doctest::Approx(4.375).epsilon(1e-12));
    CHECK(t.radius[1][1] <= 1e-12);
    // phi[2][1] = -(G_0'(1) - (1+gamma) G_0(1)) by expanding u/(s zeta) one
    // order further
    double g0 = adl::primesums::g_deriv(0, 10.0);
    double g1 = adl::primesums::g_deriv(1, 10.0);
    double want = -(g1 - (1.0 + cst::euler_gamma()) * g0);
    CHECK(t.phi[2][1] == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("k = 1 phi table is the -g/(s zeta) expansion") {
    auto t = phi_table(10.0, 1, 4);
    REQUIRE(t.phi[0].size() == 1);  // only j = 0
    auto inv = inv_s_zeta_series(4);
    auto prof = adl::primesums::profile(10.0, 4, 0);
    BiSeries gp(4, 0);
    double jf = 1.0;
    for (int n = 0; n <= 4; ++n) {
        if (n > 0) jf *= n;
        gp.set(n, 0, prof.g[0][n].value / jf);
    }
    auto want = (inv * gp).scaled(-1.0);
    for (int i = 0; i <= 4; ++i)
        CHECK(t.phi[i][0] == doctest::Approx(want.at(i, 0)).epsilon(1e-12));
}

TEST_CASE("full series assembly against direct evaluation at s = 1.02") {
    // strongest cross-check: evaluate the assembled (u, ell) series at
    // u = 0.02, ell = log(0.02) and compare with the z-finite-differenced
    // Euler-product route through (4.1)
    double s0 = 1.02, y = 10.0;
    for (int k : {1, 2, 3}) {
        auto t = phi_table(y, k, 6);
        double u = s0 - 1.0, ell = std::log(u);
        double series_val = 0.0;
        for (int i = 0; i <= t.nprime; ++i)
            for (int j = 0; j <= k - 1; ++j)
                series_val += t.phi[i][j] * std::pow(u, i) * std::pow(ell, j);
        double zeta = cst::zeta_real(s0);
        double direct = 0.0;
        for (int i = 0; i <= k - 1; ++i) {
            double kf = 1.0;
            for (int q = 2; q <= k - 1; ++q) kf *= q;
            direct += adl::comb::binom(k - 1, i) * std::pow(std::log(zeta), k - 1 - i) *
                      Gi_fd_s(s0, y, i);
        }
        double kf = 1.0;
        for (int q = 2; q <= k - 1; ++q) kf *= q;
        direct *= ((k % 2 == 0) ? 1.0 : -1.0) / (kf * s0 * zeta);
        REQUIRE(series_val == doctest::Approx(direct).epsilon(5e-6));
    }
}

TEST_CASE("phi magnitude trend stays within the theorem shape") {
    int k = 2, nprime = 3;
    double worst = 0.0;
    for (double y : {1e2, 1e3, 1e4}) {
        auto t = phi_table(y, k, nprime);
        for (int i = 1; i <= nprime; ++i)
            for (int j = 0; j <= k - 1; ++j) {
                double bound = std::pow(std::log(y), i + 1) *
                               std::pow(std::log(std::log(y + 3.0)), k - 1);
                worst = std::max(worst, std::abs(t.phi[i][j]) / bound);
            }
    }
    MESSAGE("phi magnitude ratio max: ", worst);
    CHECK(worst < 10.0);
}

TEST_CASE("hankel coefficient convention pinned by quadrature") {
    // H(i,j) must be Gamma_{j,i-1}: the w-power is i, the log-power is j
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            adl::hankel::ContourSpec spec;
            spec.cutoff_x = 50.0;
            double quad = adl::hankel::hankel_integral(j, i - 1, spec);
            REQUIRE(std::abs(hankel_coeff(i, j) - quad) < 1e-6);
        }
}

TEST_CASE("main term: k = 1 empty, k = 2 single-term identity") {
    MainTermParams p;
    p.x = 1e5;
    p.y = 10.0;
    p.k = 1;
    p.order = 2;
    CHECK(main_term(p) == 0.0);

    auto t = phi_table(10.0, 2, 3);
    p.k = 2;
    p.order = 1;
    double lx = std::log(p.x);
    double want = p.x / lx * t.phi[1][1] * hankel_coeff(1, 1) / lx;
    CHECK(main_term(p, t) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("main term matches an independently coded triple sum at k = 3") {
    auto t = phi_table(30.0, 3, 4);
    MainTermParams p;
    p.x = 1e6;
    p.y = 30.0;
    p.k = 3;
    p.order = 3;
    double lx = std::log(p.x), llx = std::log(lx);
    double want = 0.0;
    for (int i = 1; i <= 3; ++i)
        for (int J = 1; J <= 2; ++J)
            for (int j = 1; j <= J; ++j)
                want += t.phi[i][J] * adl::comb::binom(J, j) *
                        (((J - j) % 2) ? -1.0 : 1.0) * std::pow(llx, J - j) *
                        cst::gamma_mn_closed(j, i - 1) / std::pow(lx, i);
    want *= p.x / lx;
    CHECK(main_term(p, t) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("main term and the exact sum share a sign at y = 10") {
    adl::sums::SumRequest r;
    r.x = 1000000;
    r.y = 10.0;
    r.k = 2;
    int64_t exact = adl::sums::mkw_exact(r);
    MainTermParams p;
    p.x = 1e6;
    p.y = 10.0;
    p.k = 2;
    p.order = 2;
    double m = main_term(p);
    CHECK(exact > 0);
    CHECK(m > 0.0);
}

TEST_CASE("compare: window enforcement and row contents") {
    std::vector<double> xs = {1e4, 1e5};
    auto rows = compare(xs, 5.0, 2, 1);
    REQUIRE(rows.size() == 2);
    for (auto& r : rows) {
        CHECK(std::isfinite(r.normalized_residual));
        adl::sums::SumRequest q;
        q.x = static_cast<uint64_t>(r.x);
        q.y = 5.0;
        q.k = 2;
        CHECK(r.exact == adl::sums::mkw_exact(q));
    }
    // y above x^{1/k} must be rejected, naming the bound
    CHECK_THROWS_WITH_AS(compare(std::vector<double>{1e4}, 101.0, 2, 1),
                         doctest::Contains("window"), std::invalid_argument);
}
