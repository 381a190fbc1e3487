#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pinwheel/autocorr.hpp"

namespace pinwheel {

// Radial diffraction intensity I(k) = eta0 + sum_r eta(r) J0(2 pi k r),
// sampled on the uniform grid {0, dk, 2dk, ..., <= kmax}.
struct IntensityProfile {
    std::vector<double> kgrid;
    std::vector<double> values;
    double dk = 0.0;
    std::string provenance;
};

IntensityProfile intensity_profile(const RadialAutocorrelation& ac, double kmax, double dk,
                                   int threads = 0);

// Integral of the piecewise-linear interpolant of the profile over
// [k0 - delta, k0 + delta]; the window must lie inside the grid.
double ring_intensity(const IntensityProfile& p, double k0, double delta);

// Square-lattice powder reference: rings at k = sqrt(m) with weight r2(m),
// m <= mmax, zero-weight rings omitted. With normalize_to set, weights are
// rescaled so the ring at k = 1 equals that target.
struct PowderReference {
    struct Ring {
        std::uint64_t m;
        double k;
        double weight;
    };
    std::vector<Ring> rings;
    double scale = 1.0;
};

PowderReference powder_reference(std::uint64_t mmax,
                                 std::optional<double> normalize_to = std::nullopt);

void write_intensity_csv(const IntensityProfile& p, const std::string& path);
IntensityProfile read_intensity_csv(const std::string& path);
void write_powder_csv(const PowderReference& p, const std::string& path);

}  // namespace pinwheel
