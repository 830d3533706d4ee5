#include <doctest.h>

#include <cmath>
#include <random>

#include "relgs/kernel.hpp"
#include "relgs/spectral.hpp"
#include "test_util.hpp"

using namespace relgs;
using testutil::rel_err;

TEST_CASE("kernel_constant: closed form and limits") {
    ModelParams p{0.5, 1.0, 1.0, 3.0, 1};
    CHECK(rel_err(kernel_constant(p), 1.0 / M_PI) < 1e-12);
    ModelParams q{0.75, 1.0, 1.0, 3.0, 2};
    CHECK(rel_err(kernel_constant(q), 0.11073956479354291066) < 1e-12);
    // s(1-s) factor kills both endpoints
    for (double s : {1e-6, 1.0 - 1e-6}) {
        ModelParams r{s, 1.0, 1.0, 2.5, 1};
        CHECK(kernel_constant(r) < 1e-5);
        CHECK(kernel_constant(r) > 0.0);
    }
}

TEST_CASE("kernel_value: reference value, positivity, monotone decay") {
    ModelParams p{0.5, 1.0, 1.0, 3.0, 1};
    CHECK(rel_err(kernel_value(1.0, p), 0.19159302193728242904) < 1e-12);
    CHECK_THROWS_AS(kernel_value(0.0, p), std::domain_error);
    CHECK_THROWS_AS(kernel_value(-1.0, p), std::domain_error);

    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ss(0.1, 0.9), ms(0.3, 2.0);
    for (int t = 0; t < 20; ++t) {
        ModelParams q{ss(rng), ms(rng), 1.0, 3.0, 1 + (t % 3)};
        double prev = kernel_value(0.01, q);
        CHECK(kernel_value(1.0, q) > kernel_value(2.0, q));
        for (double r = 0.02; r < 30.0; r *= 1.6) {
            const double cur = kernel_value(r, q);
            CHECK(cur > 0.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("kernel_value tail decays at the e^{-mr} rate up to algebraic factors") {
    ModelParams p{0.5, 2.0, 1.0, 3.0, 1};
    const double slope =
        (std::log(kernel_value(20.0, p)) - std::log(kernel_value(10.0, p))) / 10.0;
    CHECK(std::abs(slope - (-p.m)) < 0.1 * p.m);
}

TEST_CASE("quadrature of a constant field vanishes") {
    Grid g(1, 128, 20.0);
    ModelParams mp{0.6, 1.0, 1.0, 3.0, 1};
    KernelParams kp{mp, 0.0, 1 << 14};
    RealField c(g);
    for (double& v : c.values) v = 2.0;
    const auto q = apply_operator_quadrature(c, g.size() / 2, kp);
    CHECK(std::abs(q.value) < 1e-14);
}

TEST_CASE("quadrature is linear") {
    Grid g(1, 512, 30.0);
    ModelParams mp{0.4, 1.0, 1.0, 3.0, 1};
    KernelParams kp{mp, 0.0, 1 << 14};
    std::mt19937_64 rng(5);
    RealField u1 = testutil::smooth_random_field(g, rng);
    RealField u2 = testutil::smooth_random_field(g, rng);
    RealField sum(g);
    for (std::size_t i = 0; i < g.size(); ++i) sum.values[i] = u1.values[i] + u2.values[i];
    const std::size_t at = g.size() / 2 + 7;
    const double a = apply_operator_quadrature(u1, at, kp).value;
    const double b = apply_operator_quadrature(u2, at, kp).value;
    const double ab = apply_operator_quadrature(sum, at, kp).value;
    CHECK(rel_err(ab, a + b) < 1e-12);
}

TEST_CASE("quadrature agrees with the spectral operator on a gaussian") {
    Grid g(1, 4096, 80.0);
    ModelParams mp{0.5, 1.0, 1.0, 3.0, 1};
    KernelParams kp{mp, 0.0, 4096};
    RealField u = testutil::gaussian_field(g, std::sqrt(8.0));
    const RealField spec = apply_operator(u, mp);
    const std::size_t center = g.size() / 2;
    const auto q = apply_operator_quadrature(u, center, kp);
    CHECK(q.boundary_ok);
    CHECK(std::abs(q.value - spec.values[center]) < 1e-4 * std::abs(spec.values[center]));
}

TEST_CASE("cross-representation property on random smooth compact fields") {
    // documented resolution for the 1e-3 agreement: N=1, n=8192, L=40, cutoff 15/m
    Grid g(1, 8192, 40.0);
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ss(0.3, 0.7);
    for (int t = 0; t < 5; ++t) {
        ModelParams mp{ss(rng), 1.0, 1.0, 3.0, 1};
        KernelParams kp{mp, 0.0, 1 << 14};
        RealField u = testutil::smooth_random_field(g, rng, 1.2);
        const RealField spec = apply_operator(u, mp);
        double smax = 0.0;
        for (double v : spec.values) smax = std::max(smax, std::abs(v));
        double worst = 0.0;
        for (int j = -5; j < 5; ++j) {
            const std::size_t at = g.size() / 2 + j * (g.n() / 24);
            const auto q = apply_operator_quadrature(u, at, kp);
            worst = std::max(worst, std::abs(q.value - spec.values[at]) / smax);
        }
        CHECK(worst < 1e-3);
    }
}

TEST_CASE("boundary-support violation is flagged") {
    Grid g(1, 256, 10.0);
    ModelParams mp{0.5, 1.0, 1.0, 3.0, 1};
    KernelParams kp{mp, 4.0, 1 << 14};
    RealField u(g);
    for (int i = 0; i < g.n(); ++i) u.values[i] = 1.0 + std::sin(2.0 * M_PI * i / g.n());
    const auto q = apply_operator_quadrature(u, g.size() / 2, kp);
    CHECK_FALSE(q.boundary_ok);
}

TEST_CASE("kernel parameter validation") {
    ModelParams mp{0.5, 0.0, 1.0, 3.0, 1};
    KernelParams kp{mp, 0.0, 1 << 14};
    CHECK_THROWS_AS(kp.validate(), std::invalid_argument);  // m = 0
    ModelParams mp2{0.5, 1.0, 1.0, 3.0, 1};
    KernelParams kp2{mp2, 1.0, 8};
    CHECK_THROWS_AS(kp2.validate(), std::invalid_argument);  // quad_points < 16
}

TEST_CASE("2D quadrature smoke test against the spectral path") {
    Grid g(2, 256, 24.0);
    ModelParams mp{0.5, 1.0, 1.0, 3.0, 2};
    KernelParams kp{mp, 8.0, 1 << 14};
    RealField u = testutil::gaussian_field(g, 2.0);
    const RealField spec = apply_operator(u, mp);
    double smax = 0.0;
    for (double v : spec.values) smax = std::max(smax, std::abs(v));
    std::vector<int> pt{g.n() / 2, g.n() / 2};
    const std::size_t at = g.flatten(pt.data());
    const auto q = apply_operator_quadrature(u, at, kp);
    CHECK(std::abs(q.value - spec.values[at]) / smax < 5e-3);
}
