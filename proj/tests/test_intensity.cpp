#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "oracles.hpp"
#include "pinwheel/intensity.hpp"

using namespace pinwheel;

namespace {

RadialAutocorrelation toy_ac() {
    // eta0 = 1, eta(r=1) = 8/5: the five-point example patch at rmax = 1.
    RadialAutocorrelation ac;
    ac.eta0 = BigRat(1);
    ac.coeffs.emplace_back(SqDist(BigInt(1), 0), BigRat(8, 5));
    ac.n_ref = 5;
    ac.rmax = 1.0;
    return ac;
}

RadialAutocorrelation const_ac(const BigRat& eta0) {
    RadialAutocorrelation ac;
    ac.eta0 = eta0;
    return ac;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

TEST_CASE("intensity_profile pinned values") {
    IntensityProfile flat = intensity_profile(const_ac(BigRat(1)), 2.0, 0.5);
    REQUIRE(flat.kgrid.size() == 5);
    for (double v : flat.values) CHECK(v == 1.0);

    IntensityProfile toy = intensity_profile(toy_ac(), 1.0, 0.001);
    CHECK(toy.values[0] == doctest::Approx(2.6).epsilon(1e-12));
    // At k = (first J0 zero)/(2 pi) the Bessel term vanishes.
    const double kz = 2.404825557695773 / kTwoPi;
    const std::size_t i = static_cast<std::size_t>(std::round(kz / 0.001));
    CHECK(std::abs(toy.values[i] - 1.0) < 5e-3);  // nearest grid point
    IntensityProfile exact = intensity_profile(toy_ac(), kz, kz);  // grid {0, kz}
    CHECK(std::abs(exact.values[1] - 1.0) < 1e-10);
}

TEST_CASE("profile equals eta0 plus coefficient sum at k = 0") {
    RadialAutocorrelation ac = toy_ac();
    ac.coeffs.emplace_back(SqDist(BigInt(2), 0), BigRat(4, 5));
    ac.coeffs.emplace_back(SqDist(BigInt(9), 1), BigRat(-3, 7));
    IntensityProfile prof = intensity_profile(ac, 1.0, 0.25);
    double expect = 1.0 + 8.0 / 5.0 + 4.0 / 5.0 - 3.0 / 7.0;
    CHECK(prof.values[0] == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("profile is linear in the autocorrelation") {
    RadialAutocorrelation a = toy_ac();
    RadialAutocorrelation b = toy_ac();
    b.eta0 = BigRat(3, 2);
    b.coeffs[0].second = BigRat(-2, 5);
    RadialAutocorrelation mix = toy_ac();
    mix.eta0 = 2 * a.eta0 + 3 * b.eta0;
    mix.coeffs[0].second = 2 * a.coeffs[0].second + 3 * b.coeffs[0].second;
    IntensityProfile pa = intensity_profile(a, 2.0, 0.01);
    IntensityProfile pb = intensity_profile(b, 2.0, 0.01);
    IntensityProfile pm = intensity_profile(mix, 2.0, 0.01);
    for (std::size_t i = 0; i < pm.kgrid.size(); ++i) {
        CHECK(pm.values[i] ==
              doctest::Approx(2 * pa.values[i] + 3 * pb.values[i]).epsilon(1e-9));
    }
}

TEST_CASE("intensity_profile validates parameters") {
    CHECK_THROWS_AS(intensity_profile(toy_ac(), 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(intensity_profile(toy_ac(), 0.0005, 0.001), std::invalid_argument);
}

TEST_CASE("ring_intensity pinned values") {
    IntensityProfile flat = intensity_profile(const_ac(BigRat(1)), 2.0, 0.001);
    CHECK(ring_intensity(flat, 1.0, 0.01) == doctest::Approx(0.02).epsilon(1e-12));
    IntensityProfile flat7 = intensity_profile(const_ac(BigRat(7, 2)), 2.0, 0.001);
    CHECK(ring_intensity(flat7, 0.5, 0.013) == doctest::Approx(2 * 3.5 * 0.013).epsilon(1e-12));
}

TEST_CASE("ring_intensity matches fine quadrature on the toy profile") {
    IntensityProfile toy = intensity_profile(toy_ac(), 2.0, 0.001);
    const double got = ring_intensity(toy, 1.0, 0.01);
    // Independent quadrature of 1 + (8/5) J0(2 pi k) with a much finer step.
    const double a = 0.99, b = 1.01;
    const int n = 20000;
    double acc = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double k = a + (b - a) * i / n;
        const double f = 1.0 + 1.6 * oracles::j0(kTwoPi * k);
        acc += (i == 0 || i == n) ? 0.5 * f : f;
    }
    acc *= (b - a) / n;
    CHECK(got == doctest::Approx(acc).epsilon(1e-6));
}

TEST_CASE("ring_intensity window and parameter validation") {
    IntensityProfile flat = intensity_profile(const_ac(BigRat(1)), 2.0, 0.001);
    CHECK_THROWS_AS(ring_intensity(flat, 2.0, 0.01), std::out_of_range);
    CHECK_THROWS_AS(ring_intensity(flat, 0.0, 0.01), std::out_of_range);
    CHECK_THROWS_AS(ring_intensity(flat, 1.0, 0.0001), std::invalid_argument);
    CHECK_THROWS_AS(ring_intensity(flat, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("powder_reference pinned values") {
    PowderReference p5 = powder_reference(5);
    REQUIRE(p5.rings.size() == 4);
    CHECK(p5.rings[0].m == 1);
    CHECK(p5.rings[0].weight == 4.0);
    CHECK(p5.rings[1].k == doctest::Approx(std::sqrt(2.0)));
    CHECK(p5.rings[2].m == 4);
    CHECK(p5.rings[3].weight == 8.0);

    PowderReference norm = powder_reference(5, 1.0);
    CHECK(norm.rings[0].weight == 1.0);
    CHECK(norm.rings[1].weight == 1.0);
    CHECK(norm.rings[2].weight == 1.0);
    CHECK(norm.rings[3].weight == 2.0);

    PowderReference p3 = powder_reference(3);
    for (const auto& r : p3.rings) CHECK(r.m != 3);
}

TEST_CASE("powder weights equal brute-force lattice counts up to 500") {
    PowderReference p = powder_reference(500);
    std::size_t idx = 0;
    for (std::uint64_t m = 1; m <= 500; ++m) {
        const std::uint64_t brute = oracles::r2_brute(m);
        if (brute == 0) continue;
        REQUIRE(idx < p.rings.size());
        CHECK(p.rings[idx].m == m);
        CHECK(p.rings[idx].weight == static_cast<double>(brute));
        ++idx;
    }
    CHECK(idx == p.rings.size());
}

TEST_CASE("intensity csv round trip") {
    IntensityProfile toy = intensity_profile(toy_ac(), 1.0, 0.01);
    const std::string path = (std::filesystem::temp_directory_path() / "pw_int_rt.csv").string();
    write_intensity_csv(toy, path);
    IntensityProfile back = read_intensity_csv(path);
    REQUIRE(back.kgrid.size() == toy.kgrid.size());
    CHECK(back.dk == doctest::Approx(toy.dk));
    for (std::size_t i = 0; i < toy.kgrid.size(); ++i)
        CHECK(back.values[i] == doctest::Approx(toy.values[i]).epsilon(1e-14));
    std::filesystem::remove(path);
}
