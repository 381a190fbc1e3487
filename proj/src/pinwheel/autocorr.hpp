#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pinwheel/exact.hpp"
#include "pinwheel/tiling.hpp"

namespace pinwheel {

// Scattering weights per chirality; the interesting cases live in {-1, 0, 1}.
struct Weights {
    BigRat alpha_plus;
    BigRat alpha_minus;
};

enum class Estimator { all_pairs, eroded_core };

// Weight-independent ordered-pair census: for every reduced squared distance
// 0 < |x-y|^2 <= rmax^2 with x in the reference set and y in the patch, the
// number of ordered pairs split by (chi_x, chi_y). Exact: candidate pairs come
// from a floating-point cell grid but are confirmed in integer arithmetic.
struct PairHistogram {
    struct Entry {
        SqDist d;
        std::uint64_t count[4];  // index (chi_x, chi_y), 0 = plus, 1 = minus
    };
    std::vector<Entry> entries;  // ascending distance
    std::uint64_t n_ref = 0;
    std::uint64_t n_ref_plus = 0;
    double rmax = 0.0;
};

PairHistogram pair_histogram(const Patch& p, double rmax, Estimator est, int threads = 0);

// Circularly symmetric autocorrelation approximant: eta0 at r = 0 plus exact
// rational coefficients keyed by reduced squared distance, normalized per
// reference point. Zero coefficients are omitted.
struct RadialAutocorrelation {
    BigRat eta0;
    std::vector<std::pair<SqDist, BigRat>> coeffs;  // ascending distance
    std::uint64_t n_ref = 0;
    double rmax = 0.0;
};

RadialAutocorrelation autocorr_from_histogram(const PairHistogram& h, const Weights& w);

RadialAutocorrelation estimate_autocorr(const Patch& p, const Weights& w, double rmax,
                                        Estimator est, int threads = 0);

void write_autocorr_csv(const RadialAutocorrelation& ac, const std::string& path);
RadialAutocorrelation read_autocorr_csv(const std::string& path);

}  // namespace pinwheel
