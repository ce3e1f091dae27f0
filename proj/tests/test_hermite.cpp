#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cip/hermite.hpp"
#include "support/oracles.hpp"

using namespace cip;

TEST_CASE("basis cardinal values at the endpoints") {
    HermiteBasis b0 = hermite_basis(0.0);
    CHECK(b0.p1 == 1.0);
    CHECK(b0.p2 == 0.0);
    CHECK(b0.q1 == 0.0);
    CHECK(b0.q2 == 0.0);

    HermiteBasis b1 = hermite_basis(1.0);
    CHECK(b1.p1 == 0.0);
    CHECK(b1.p2 == 1.0);
    CHECK(b1.q1 == 0.0);
    CHECK(b1.q2 == 0.0);
}

TEST_CASE("basis at the midpoint") {
    HermiteBasis b = hermite_basis(0.5);
    CHECK(b.p1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.p2 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(b.q1 == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(b.q2 == doctest::Approx(-0.125).epsilon(1e-15));
}

TEST_CASE("partition of unity") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> xi(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        HermiteBasis b = hermite_basis(xi(rng));
        CHECK(b.p1 + b.p2 == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("endpoint reproduction") {
    HermiteCell cell{0.3, 0.7, 1.5, -0.25, 2.0, 0.5};
    ProfileSample left = eval_profile(cell, 0.3);
    CHECK(left.value == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(left.derivative == doctest::Approx(2.0).epsilon(1e-13));
    ProfileSample right = eval_profile(cell, 0.7);
    CHECK(right.value == doctest::Approx(-0.25).epsilon(1e-13));
    CHECK(right.derivative == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("reproduces x^3 from its endpoint data") {
    HermiteCell cell{0.0, 1.0, 0.0, 1.0, 0.0, 3.0};
    ProfileSample s = eval_profile(cell, 0.5);
    CHECK(s.value == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(s.derivative == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("exact for random cubics") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> pos(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        double a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
        auto g = [&](double x) { return a + x * (b + x * (c + x * d)); };
        auto gp = [&](double x) { return b + x * (2.0 * c + x * 3.0 * d); };
        double xl = coef(rng), xr = xl + 0.25 + pos(rng);
        HermiteCell cell{xl, xr, g(xl), g(xr), gp(xl), gp(xr)};
        for (int i = 0; i < 100; ++i) {
            double x = xl + pos(rng) * (xr - xl);
            ProfileSample s = eval_profile(cell, x);
            CHECK(s.value == doctest::Approx(g(x)).epsilon(1e-12));
            CHECK(s.derivative == doctest::Approx(gp(x)).epsilon(1e-11));
        }
    }
}

TEST_CASE("matches the monomial form of the same cubic") {
    HermiteCell cell{0.2, 0.45, 0.7, -0.3, 1.1, 0.9};
    auto mono = oracles::MonomialCubic::fit(0.2, 0.45, 0.7, -0.3, 1.1, 0.9);
    for (double x : {0.2, 0.26, 0.33, 0.401, 0.45}) {
        ProfileSample s = eval_profile(cell, x);
        CHECK(s.value == doctest::Approx(mono.value(x)).epsilon(1e-12));
        CHECK(s.derivative == doctest::Approx(mono.slope(x)).epsilon(1e-11));
    }
}

TEST_CASE("derivative is consistent with a second-order difference of the value") {
    HermiteCell cell{0.0, 1.0, 0.3, -0.2, 1.7, 0.4};
    double x = 0.37;
    double exact = eval_profile(cell, x).derivative;
    double prev_err = -1.0;
    for (double h : {1e-2, 5e-3, 2.5e-3}) {
        double fd =
            (eval_profile(cell, x + h).value - eval_profile(cell, x - h).value) / (2.0 * h);
        double err = std::abs(fd - exact);
        if (prev_err > 0.0) CHECK(prev_err / err == doctest::Approx(4.0).epsilon(0.05));
        prev_err = err;
    }
}

TEST_CASE("fourth-order interpolation error on a narrow gaussian") {
    auto u0 = [](double x) { return std::exp(-std::pow((x - 0.2) / 0.05, 2)); };
    auto u0p = [u0](double x) { return u0(x) * (-2.0 * (x - 0.2) / (0.05 * 0.05)); };
    // u'''' of the gaussian is at most ~ 12/sigma^4 with sigma^2 = 0.05^2/2.
    double prev = -1.0;
    for (double dx : {1.0 / 200, 1.0 / 400, 1.0 / 800}) {
        double xl = 0.2 - 0.4 * dx, xr = xl + dx;
        HermiteCell cell{xl, xr, u0(xl), u0(xr), u0p(xl), u0p(xr)};
        double worst = 0.0;
        for (int i = 1; i < 50; ++i) {
            double x = xl + dx * i / 50.0;
            worst = std::max(worst, std::abs(eval_profile(cell, x).value - u0(x)));
        }
        if (prev > 0.0) {
            double order = oracles::order_between(prev, worst);
            CHECK(order > 3.5);
            CHECK(order < 4.5);
        }
        prev = worst;
    }
}

TEST_CASE("rejects evaluation outside the tolerance band") {
    HermiteCell cell{0.0, 0.5, 1.0, 2.0, 0.0, 0.0};
    CHECK_THROWS_AS(eval_profile(cell, 0.5 + 1e-9), input_error);
    CHECK_THROWS_AS(eval_profile(cell, -1e-9), input_error);
    CHECK_NOTHROW(eval_profile(cell, 0.5 + 1e-13 * 0.5));
}
