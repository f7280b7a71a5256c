#include <doctest.h>

#include <cmath>

#include "c2b/membership.hpp"
#include "generators.hpp"

using namespace c2b;

TEST_CASE("trapezoid degrees") {
    CHECK(degree(Trapezoid{0, 0, 30, 70}, 15) == 1.0);
    CHECK(degree(Trapezoid{10, 20, 30, 40}, 15) == doctest::Approx(0.5));
    CHECK(degree(Trapezoid{10, 20, 30, 40}, 35) == doctest::Approx(0.5));
    CHECK(degree(Trapezoid{10, 20, 30, 40}, 5) == 0.0);
    CHECK(degree(Trapezoid{10, 20, 30, 40}, 45) == 0.0);

    SUBCASE("shoulders reach 1 at the domain edge") {
        CHECK(degree(Trapezoid{0, 0, 0.25, 0.5}, 0.0) == 1.0);
        CHECK(degree(Trapezoid{0.5, 0.75, 1, 1}, 1.0) == 1.0);
        CHECK(degree(Trapezoid{0, 0, 0.25, 0.5}, 0.5) == 0.0);
    }
    SUBCASE("vertical edges") {
        const Trapezoid box{45, 45, 80, 80};
        CHECK(degree(box, 80.0) == 1.0);
        CHECK(degree(box, 80.0000001) == 0.0);
    }
}

TEST_CASE("gauss2 degrees") {
    CHECK(degree(Gauss2{1, 0, 1, 1, 0, 1}, 0.0) == 1.0);
    CHECK(gauss2_raw(Gauss2{1, 0, 1, 1, 0, 1}, 0.0) == 2.0);

    // 0.9 * exp(0) + 0.3 * exp(-(20 - 60)^2 / 10^2), evaluated independently
    const Gauss2 g{0.9, 20, 15, 0.3, 60, 10};
    CHECK(degree(g, 20.0) == doctest::Approx(0.9000000337605525).epsilon(1e-14));

    SUBCASE("negative sums clamp to zero") {
        CHECK(degree(Gauss2{-1, 0, 1, 0, 0, 1}, 0.0) == 0.0);
    }
}

TEST_CASE("crisp labels") {
    const CrispLabel l{{0, 3}};
    CHECK(degree(l, 0.0) == 1.0);
    CHECK(degree(l, 3.0) == 1.0);
    CHECK(degree(l, 1.0) == 0.0);
    CHECK(degree(l, 0.5) == 0.0);
}

TEST_CASE("check rejects malformed shapes") {
    CHECK(check(Trapezoid{0, 1, 2, 3}).empty());
    CHECK(check(Trapezoid{2, 1, 2, 3}) == "trapezoid requires a <= b");
    CHECK(check(Trapezoid{0, 3, 2, 3}) == "trapezoid requires b <= c");
    CHECK(check(Trapezoid{0, 1, 4, 3}) == "trapezoid requires c <= d");
    CHECK_FALSE(check(Gauss2{1, 0, 0, 1, 0, 1}).empty());
    CHECK_FALSE(check(Gauss2{1, 0, 1, 1, 0, -2}).empty());
    CHECK_FALSE(check(CrispLabel{}).empty());
    CHECK_FALSE(check(CrispLabel{{2, 1}}).empty());
}

TEST_CASE("property: degrees stay in [0, 1]") {
    testing::Gen gen(0xC0FFEE);
    const Domain d{0, 100};
    for (int trial = 0; trial < 2000; ++trial) {
        const MembershipFunction mf = gen.any_mf(d);
        for (int k = 0; k < 50; ++k) {
            const double x = gen.uniform(d.lo, d.hi);
            const double mu = degree(mf, x);
            REQUIRE(mu >= 0.0);
            REQUIRE(mu <= 1.0);
        }
    }
}

TEST_CASE("property: affine maps of breakpoints and inputs preserve degrees") {
    testing::Gen gen(17);
    const Domain d{-10, 10};
    for (int trial = 0; trial < 500; ++trial) {
        const double scale = gen.uniform(0.1, 20.0);
        const double shift = gen.uniform(-100.0, 100.0);
        auto map = [&](double v) { return scale * v + shift; };

        const Trapezoid t = gen.trapezoid(d);
        const Trapezoid tt{map(t.a), map(t.b), map(t.c), map(t.d)};
        const Gauss2 g = gen.gauss2(d);
        const Gauss2 gg{g.alpha1, map(g.beta1), scale * g.gamma1, g.alpha2, map(g.beta2), scale * g.gamma2};
        for (int k = 0; k < 20; ++k) {
            const double x = gen.uniform(d.lo, d.hi);
            // Edge samples can land on either side of a breakpoint after rounding.
            if (std::abs(x - t.a) > 1e-9 && std::abs(x - t.d) > 1e-9)
                REQUIRE(degree(tt, map(x)) == doctest::Approx(degree(t, x)).epsilon(1e-9));
            REQUIRE(degree(gg, map(x)) == doctest::Approx(degree(g, x)).epsilon(1e-9));
        }
    }
}
