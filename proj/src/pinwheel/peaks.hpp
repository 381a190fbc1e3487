#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pinwheel/intensity.hpp"

namespace pinwheel {

// One ring at k = sqrt(m): ell is the 5-adic valuation of m, s the number of
// prime factors of m equal to 1 mod 4 other than 5, counted with multiplicity.
struct PeakRecord {
    std::uint64_t m = 0;
    int ell = 0;
    int s = 0;
    double k = 0.0;
    double ratio = 0.0;      // integrated ring intensity relative to the k = 1 ring
    double collapsed = 0.0;  // ratio / 2^s
};

std::pair<int, int> classify_k(std::uint64_t m);

std::vector<PeakRecord> collapse_ratios(std::vector<PeakRecord> records);

struct FitResult {
    double c = 0.0;
    double rel_rms_residual = 0.0;
};

// Least-squares fit of y = c/k: c = sum(y/k) / sum(1/k^2); the residual is
// rms(y - c/k) / mean(|y|).
FitResult fit_inverse_k(const std::vector<std::pair<double, double>>& points);

// Ring records for every m <= mmax with r2(m) > 0; the profile must cover
// [1 - delta, sqrt(mmax) + delta].
std::vector<PeakRecord> peak_table(const IntensityProfile& profile, std::uint64_t mmax,
                                   double delta);

struct GroupFit {
    int ell = 0;
    int s = 0;
    FitResult fit;
};

// Per-(ell, s) c/k fits over the record table; groups with fewer than two
// records are skipped.
std::vector<GroupFit> group_fits(const std::vector<PeakRecord>& records);

void write_peaks_csv(const std::vector<PeakRecord>& records, const std::string& path);
void write_fits_csv(const std::vector<GroupFit>& fits, const std::string& path);

}  // namespace pinwheel
