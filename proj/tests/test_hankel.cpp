#include "adl/hankel.hpp"

#include <cmath>
#include <stdexcept>

#include "adl/constants.hpp"
#include "doctest.h"

using namespace adl::hankel;
namespace cst = adl::constants;

TEST_CASE("analytic integrand vanishes: full Hankel value is 1/Gamma(-N-1) = 0") {
    ContourSpec spec;
    spec.cutoff_x = 30.0;
    for (int N = 0; N <= 2; ++N)
        CHECK(std::abs(hankel_integral(0, N, spec)) < 1e-8);
}

TEST_CASE("first log powers reproduce the reciprocal-gamma derivatives") {
    ContourSpec spec;
    spec.cutoff_x = 30.0;
    CHECK(hankel_integral(1, 0, spec) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(hankel_integral(2, 0, spec) ==
          doctest::Approx(2.0 * (1.0 - cst::euler_gamma())).epsilon(1e-6));
}

TEST_CASE("conjugate symmetry: upper half doubled equals the full contour") {
    ContourSpec spec;
    spec.cutoff_x = 25.0;
    spec.nodes_per_unit = 32;
    for (int m : {1, 2}) {
        for (int N : {0, 2}) {
            auto full = contour_integral_raw(m, N, spec);
            auto up = contour_integral_raw(m, N, spec, Branch::principal,
                                           HalfMode::upper_doubled);
            CHECK(std::abs(full.real() - up.real()) < 1e-10 * std::max(1.0, std::abs(full)));
            CHECK(std::abs(full.imag()) < 1e-10 * std::max(1.0, std::abs(full)));
        }
    }
}

TEST_CASE("branch cut carries the value: a real-log branch must disagree") {
    ContourSpec spec;
    spec.cutoff_x = 25.0;
    spec.nodes_per_unit = 32;
    // m = 0: no log factor, both branches identical
    auto a0 = contour_integral_raw(0, 1, spec, Branch::principal);
    auto b0 = contour_integral_raw(0, 1, spec, Branch::broken_real);
    CHECK(std::abs(a0 - b0) < 1e-13);
    // m >= 1: the arms' monodromy is the whole point
    auto a1 = contour_integral_raw(1, 0, spec, Branch::principal);
    auto b1 = contour_integral_raw(1, 0, spec, Branch::broken_real);
    CHECK(std::abs(a1 - b1) > 1e-2);
}

TEST_CASE("truncation decay scan at (m,N) = (1,1)") {
    std::vector<double> cuts = {10, 20, 30};
    auto rows = truncation_decay_scan(1, 1, cuts);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].abs_error > rows[1].abs_error);
    CHECK(rows[1].abs_error > rows[2].abs_error);
    CHECK(std::log(rows[0].abs_error / rows[1].abs_error) >= 5.0);
}

TEST_CASE("error floor at X = 40 for small m, N") {
    ContourSpec spec;
    spec.cutoff_x = 40.0;
    for (int m = 0; m <= 2; ++m)
        for (int N = 0; N <= 2; ++N) {
            double ref = cst::gamma_mn_closed(m, N);
            CHECK(std::abs(hankel_integral(m, N, spec) - ref) < 1e-8);
        }
}

TEST_CASE("three-way agreement with the closed form at a deep cutoff") {
    ContourSpec spec;
    spec.cutoff_x = 60.0;
    for (int m = 0; m <= 4; ++m)
        for (int N = 0; N <= 5; ++N) {
            double ref = cst::gamma_mn_closed(m, N);
            REQUIRE(std::abs(hankel_integral(m, N, spec) - ref) < 1e-6);
        }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(truncation_decay_scan(1, 1, std::vector<double>{10, 20}),
                    std::invalid_argument);
    CHECK_THROWS_AS(truncation_decay_scan(1, 1, std::vector<double>{10, 30, 20}),
                    std::invalid_argument);
    ContourSpec bad;
    bad.cutoff_x = -1;
    CHECK_THROWS_AS(hankel_integral(0, 0, bad), std::invalid_argument);
}
