#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pinwheel/bessel.hpp"

using pinwheel::bessel_j0;

TEST_CASE("bessel_j0 pinned values") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(std::abs(bessel_j0(1.0) - 0.7651976865579666) <= 1e-10);
    CHECK(std::abs(bessel_j0(2.404825557695773)) <= 1e-10);
}

TEST_CASE("bessel_j0 domain") {
    CHECK_THROWS_AS(bessel_j0(-1e-9), std::domain_error);
    CHECK_THROWS_AS(bessel_j0(1e6 + 1.0), std::domain_error);
    CHECK(std::abs(bessel_j0(1e6)) <= 1.0);
}

TEST_CASE("bessel_j0 against the series oracle") {
    // Dense sweep near the series/asymptotic crossover, coarse elsewhere.
    for (double z = 11.0; z <= 13.0; z += 0.01)
        CHECK(std::abs(bessel_j0(z) - oracles::j0(z)) <= 1e-10);
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(0.0, 100.0);
    for (int i = 0; i < 400; ++i) {
        const double z = dist(rng);
        CAPTURE(z);
        CHECK(std::abs(bessel_j0(z) - oracles::j0(z)) <= 1e-10);
    }
    for (double z : {200.0, 500.0, 1000.0, 5000.0, 40000.0})
        CHECK(std::abs(bessel_j0(z)) <= 1.0 + 1e-15);
}

TEST_CASE("bessel_j0 first zero by bisection") {
    const double oracle_zero = oracles::j0_first_zero();
    CHECK(std::abs(oracle_zero - 2.404825557695773) <= 1e-12);
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (bessel_j0(lo) * bessel_j0(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    CHECK(std::abs(0.5 * (lo + hi) - 2.404825557695773) <= 1e-10);
}

TEST_CASE("bessel_j0 bounded by one") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1e6);
    for (int i = 0; i < 2000; ++i) CHECK(std::abs(bessel_j0(dist(rng))) <= 1.0 + 1e-14);
}
