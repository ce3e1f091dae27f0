#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cip/characteristics.hpp"
#include "cip/hermite.hpp"
#include "support/oracles.hpp"

using namespace cip;

namespace {

SmoothCoefficient constant_speed(double c) {
    SmoothCoefficient m;
    m.c = [c](double) { return c; };
    m.c_prime = [](double) { return 0.0; };
    return m;
}

SmoothCoefficient cosine_speed() {
    SmoothCoefficient m;
    m.c = [](double x) { return 1.0 / (std::cos(4.0 * oracles::kPi * x) + 2.0); };
    m.c_prime = [](double x) {
        double d = std::cos(4.0 * oracles::kPi * x) + 2.0;
        return 4.0 * oracles::kPi * std::sin(4.0 * oracles::kPi * x) / (d * d);
    };
    return m;
}

}  // namespace

TEST_CASE("constant speed foot is an exact translation") {
    double y = backtrack_foot(constant_speed(2.0), 0.5, 0.1);
    CHECK(y == doctest::Approx(0.3).epsilon(1e-13));

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int i = 0; i < 20; ++i) {
        double c = u(rng), x = u(rng), dt = u(rng);
        CHECK(backtrack_foot(constant_speed(c), x, dt) ==
              doctest::Approx(x - c * dt).epsilon(1e-12));
    }
}

TEST_CASE("linear speed foot matches the exponential flow") {
    SmoothCoefficient m;
    m.c = [](double x) { return x; };
    m.c_prime = [](double) { return 1.0; };
    double y = backtrack_foot(m, 1.0, 0.5);
    CHECK(y == doctest::Approx(std::exp(-0.5)).epsilon(1e-10));
}

TEST_CASE("round-trip through the oscillatory speed") {
    SmoothCoefficient m = cosine_speed();
    double y = backtrack_foot(m, 0.5, 0.1);
    double back = integrate_characteristic(m, y, 0.1);
    CHECK(std::abs(back - 0.5) < 1e-9);

    // Against the travel-time inversion.
    CHECK(y == doctest::Approx(oracles::cosine_speed_foot(0.5, 0.1)).epsilon(1e-9));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xs(0.0, 1.0), ts(0.01, 0.6);
    for (int i = 0; i < 25; ++i) {
        double x = xs(rng), dt = ts(rng);
        double foot = backtrack_foot(m, x, dt);
        CHECK(std::abs(integrate_characteristic(m, foot, dt) - x) < 1e-9);
    }
}

TEST_CASE("locate_cell examples") {
    Grid g = build_grid(4, 0.0, 1.0);

    FootPoint interior = locate_cell(g, 0.3);
    CHECK(interior.cell_index == 2);
    CHECK(interior.lambda == doctest::Approx(0.8).epsilon(1e-13));

    FootPoint on_node = locate_cell(g, 0.25);
    CHECK(on_node.cell_index == 2);  // cell [0.25, 0.5]
    CHECK(on_node.lambda == 1.0);

    FootPoint wrapped = locate_cell(g, -0.1);
    CHECK(wrapped.y == doctest::Approx(0.9).epsilon(1e-13));
    CHECK(wrapped.cell_index == 4);  // cell [0.75, 1.0]
    CHECK(wrapped.lambda == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("locate_cell output satisfies the foot-point invariants") {
    Grid g = build_grid(7, -1.0, 2.5);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ys(-30.0, 30.0);
    for (int i = 0; i < 500; ++i) {
        FootPoint f = locate_cell(g, ys(rng));
        CHECK(f.cell_index >= 1);
        CHECK(f.cell_index <= 7);
        CHECK(f.lambda >= 0.0);
        CHECK(f.lambda <= 1.0);
        CHECK(f.y >= g.node(f.cell_index - 1) - 1e-10 * g.dx);
        CHECK(f.y <= g.node(f.cell_index) + 1e-10 * g.dx);
    }
}

TEST_CASE("node tie-break cannot change a scheme update") {
    // Both candidate cells interpolate the same nodal data, so their
    // profiles agree at the shared node.
    Grid g = build_grid(8, 0.0, 1.0);
    std::vector<double> u(8), v(8);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int k = 0; k < 8; ++k) {
        u[k] = d(rng);
        v[k] = d(rng);
    }
    for (int m = 0; m < 8; ++m) {
        double xm = g.node(m);
        HermiteCell left{g.node(m - 1), xm, u[g.wrap(m - 1)], u[m], v[g.wrap(m - 1)], v[m]};
        HermiteCell right{xm, g.node(m + 1), u[m], u[g.wrap(m + 1)], v[m], v[g.wrap(m + 1)]};
        ProfileSample a = eval_profile(left, xm);
        ProfileSample b = eval_profile(right, xm);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
        CHECK(a.derivative == doctest::Approx(b.derivative).epsilon(1e-11));
    }
}

TEST_CASE("backtrack_feet matches per-node backtracking") {
    Grid g = build_grid(16, 0.0, 1.0);
    SmoothCoefficient m = cosine_speed();
    auto feet = backtrack_feet(g, m, 0.05);
    REQUIRE(feet.size() == 16);
    for (int k = 0; k < 16; ++k) {
        double y = backtrack_foot(m, g.node(k), 0.05);
        FootPoint f = locate_cell(g, y);
        CHECK(feet[k].cell_index == f.cell_index);
        CHECK(feet[k].lambda == doctest::Approx(f.lambda).epsilon(1e-14));
    }
}

TEST_CASE("integrator reports step underflow") {
    SmoothCoefficient m;
    // Speed blows up approaching 0.5 from the left; the backward integration
    // from beyond it cannot cross.
    m.c = [](double x) { return 1.0 / std::abs(0.5 - x); };
    m.c_prime = [](double) { return 0.0; };
    CHECK_THROWS_AS(backtrack_foot(m, 0.9, 10.0), numerical_error);
}
