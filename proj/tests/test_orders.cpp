#include "adl/orders.hpp"

#include <vector>

#include <stdexcept>

#include "doctest.h"

using namespace adl::orders;

namespace {

GrowthClass cls(Rat rho, Rat c, Rat a, Rat b, Rat d) {
    GrowthClass g;
    g.rho = rho;
    g.c = c;
    g.alpha = a;
    g.beta = b;
    g.delta = d;
    return g;
}

const Rat Z(0), ONE(1);

const GrowthClass kConstOne = cls(Z, Z, Z, Z, Z);
const GrowthClass kLog = cls(Z, Z, Z, Z, ONE);
const GrowthClass kExpSqrt = cls(Z, ONE, Rat(1, 2), Z, Z);
const GrowthClass kExp2Sqrt = cls(Z, Rat(2), Rat(1, 2), Z, Z);
const GrowthClass kExpChain1 = cls(Z, ONE, ONE, Rat(-2), Z);   // exp(logx/llx^2)
const GrowthClass kExpChain2 = cls(Z, ONE, ONE, Rat(-1), Z);   // exp(logx/llx)
const GrowthClass kX = cls(ONE, Z, Z, Z, Z);
const GrowthClass kXOverLog = cls(ONE, Z, Z, Z, Rat(-1));
const GrowthClass kX2 = cls(Rat(2), Z, Z, Z, Z);
const GrowthClass kSqrtX = cls(Rat(1, 2), Z, Z, Z, Z);

}  // namespace

TEST_CASE("canonical form validation") {
    CHECK(is_canonical(kX));
    CHECK(is_canonical(kExpChain1));
    CHECK(!is_canonical(cls(Z, ONE, ONE, Z, Z)));     // c (log x)^1: belongs to rho
    CHECK(!is_canonical(cls(Z, Rat(-1), Rat(1, 2), Z, Z)));  // negative c
    CHECK(!is_canonical(cls(Z, Z, Rat(1, 2), Z, Z)));        // c = 0 needs alpha = beta = 0
    CHECK_THROWS_AS(is_subradical(cls(Z, ONE, Rat(2), Z, Z)), std::invalid_argument);
}

TEST_CASE("subradical characterization") {
    CHECK(is_subradical(kExpSqrt));
    CHECK(is_subradical(kExpChain1));
    CHECK(is_subradical(kLog));
    CHECK(!is_subradical(kX));
    CHECK(!is_subradical(kSqrtX));
    CHECK(!is_subradical(kXOverLog));
    // subradical iff f <_forall x, on every fixture
    for (const auto& f : {kLog, kExpSqrt, kExp2Sqrt, kExpChain1, kExpChain2, kX, kXOverLog,
                          kX2, kSqrtX})
        CHECK(is_subradical(f) == lt_forall(f, kX));
}

TEST_CASE("headline comparisons") {
    CHECK(lt_forall(kExpSqrt, kX));
    CHECK(!lt_forall(kX, kX));
    CHECK(lt_forall(kExpChain1, kExpChain2));
    CHECK(!lt_forall(kXOverLog, kX));
    CHECK(lt_exists(kX, kX2));
    CHECK(!lt_exists(kXOverLog, kX));
    CHECK(!lt_exists(kX, kX));
    CHECK_THROWS_AS(lt_forall(kX, kConstOne), std::invalid_argument);
}

TEST_CASE("strict partial order laws over the fixture family") {
    std::vector<GrowthClass> fam = {kLog,
                                    cls(Z, Z, Z, Z, Rat(3)),
                                    kExpSqrt,
                                    kExp2Sqrt,
                                    cls(Z, ONE, Rat(2, 3), Z, Z),
                                    kExpChain2,
                                    kExpChain1,
                                    cls(Z, ONE, Z, Rat(2), Z),
                                    kX,
                                    kXOverLog,
                                    kX2,
                                    kSqrtX};
    for (const auto& f : fam) {
        CHECK(!lt_forall(f, f));
        CHECK(!lt_exists(f, f));
    }
    for (const auto& f : fam)
        for (const auto& g : fam) {
            if (lt_forall(f, g)) CHECK(lt_exists(f, g));
            for (const auto& h : fam) {
                if (lt_forall(f, g) && lt_forall(g, h)) CHECK(lt_forall(f, h));
                if (lt_exists(f, g) && lt_exists(g, h)) CHECK(lt_exists(f, h));
            }
        }
}

TEST_CASE("the subradical family is closed under +, *, and positive powers") {
    CHECK(is_subradical(mul(kExpSqrt, kExp2Sqrt)));
    CHECK(is_subradical(add_max(kExpSqrt, cls(Z, ONE, Rat(2, 3), Z, Z))));
    CHECK(is_subradical(pow(kExpChain2, Rat(7, 2))));
    // product of incompatible intermediate scales has no canonical form
    CHECK_THROWS_AS(mul(kExpSqrt, cls(Z, ONE, Rat(2, 3), Z, Z)), OutOfClassError);
    // sums always canonicalize to the dominant branch
    CHECK(add_max(kX, kExpSqrt).rho == ONE);
}

TEST_CASE("the sifting chain ascends strictly") {
    std::vector<GrowthClass> chain = {cls(Z, ONE, ONE, Rat(-3, 2), Z), kExpChain1,
                                      kExpChain2, cls(Z, ONE, ONE, Rat(-1, 2), Z)};
    for (size_t i = 0; i < chain.size(); ++i) {
        CHECK(is_subradical(chain[i]));
        if (i) CHECK(lt_forall(chain[i - 1], chain[i]));
    }
}

TEST_CASE("lower set equality instances") {
    CHECK(lower_set_equal(kX, kXOverLog));
    CHECK(!lower_set_equal(kX, kX2));
    // exp(sqrt log x) vs exp(2 sqrt log x): the quotient is exp(sqrt log x)
    // itself and lt_forall(exp(sqrt log x), exp(2 sqrt log x)) fails on equal
    // scales; cross-checked by hand: exp(1.5 sqrt(log x)) separates the two
    // strict lower sets. Verdict: not equal.
    CHECK(!lower_set_equal(kExpSqrt, kExp2Sqrt));
    CHECK_THROWS_AS(lower_set_equal(kExpSqrt, cls(Z, ONE, Rat(2, 3), Z, Z)), OutOfClassError);
    CHECK_THROWS_AS(lower_set_equal(kX, kConstOne), std::invalid_argument);
}

TEST_CASE("maximality fixture for the sifting bound's log") {
    // log Y(x) has llx-scale coefficient 1; log of exp((log x)^{1-eps}) has
    // llx-scale coefficient 1 - eps < 1. The latter is dominated, never the
    // former.
    GrowthClass logY = cls(Z, Z, Z, Z, ONE);
    GrowthClass logS = cls(Z, Z, Z, Z, Rat(9, 10));
    CHECK(lt_exists(logS, logY));
    CHECK(!lt_exists(logY, logS));
    CHECK(!lt_forall(logS, logY));  // same scale: only the <_exists order separates them
}

TEST_CASE("expression parser") {
    auto f = parse("exp(logx^0.5)");
    CHECK(f.c == ONE);
    CHECK(f.alpha == Rat(1, 2));
    CHECK(is_subradical(f));

    auto g = parse("x");
    CHECK(g.rho == ONE);
    CHECK(lt_forall(f, g));

    auto h = parse("x * logx^-1");
    CHECK(h.rho == ONE);
    CHECK(h.delta == Rat(-1));

    auto c = parse("exp(2*logx*llx^-3/2)");
    CHECK(c.c == Rat(2));
    CHECK(c.alpha == ONE);
    CHECK(c.beta == Rat(-3, 2));

    auto lg3 = parse("logx^3");
    CHECK(lg3.delta == Rat(3));

    CHECK(parse("exp(llx^2)").beta == Rat(2));
    CHECK(parse("x^1/2").rho == Rat(1, 2));
}

TEST_CASE("parser errors carry position and expectation") {
    CHECK_THROWS_WITH_AS(parse("llx"), doctest::Contains("inside exp()"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse("exp(x)"), doctest::Contains("no 'x' inside exp()"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse("exp(logx"), doctest::Contains("')'"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse("y"), doctest::Contains("position 0"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse("x^"), doctest::Contains("rational"), std::invalid_argument);
    CHECK_THROWS_AS(parse("x x"), std::invalid_argument);
}

TEST_CASE("to_string round trips the displayed form") {
    CHECK(to_string(kXOverLog) == "log f = 1*logx + -1*llx");
    CHECK(to_string(kExpSqrt) == "log f = 1*(logx)^1/2*(llx)^0");
    CHECK(to_string(kConstOne) == "log f = 0");
}
