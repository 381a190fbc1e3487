#include "pinwheel/peaks.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

#include "pinwheel/csv.hpp"
#include "pinwheel/factor.hpp"

namespace pinwheel {

std::pair<int, int> classify_k(std::uint64_t m) {
    if (m < 1) throw std::invalid_argument("classify_k: m must be >= 1");
    int ell = 0, s = 0;
    for (auto [p, e] : factorize(m)) {
        if (p == 5)
            ell = e;
        else if (p % 4 == 1)
            s += e;
    }
    return {ell, s};
}

std::vector<PeakRecord> collapse_ratios(std::vector<PeakRecord> records) {
    for (PeakRecord& r : records) r.collapsed = r.ratio / std::ldexp(1.0, r.s);
    return records;
}

FitResult fit_inverse_k(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 2) throw std::invalid_argument("fit_inverse_k: need at least 2 points");
    double num = 0.0, den = 0.0;
    for (const auto& [k, y] : points) {
        if (!(k > 0.0)) throw std::invalid_argument("fit_inverse_k: k must be positive");
        num += y / k;
        den += 1.0 / (k * k);
    }
    FitResult out;
    out.c = num / den;
    double ss = 0.0, ay = 0.0;
    for (const auto& [k, y] : points) {
        const double r = y - out.c / k;
        ss += r * r;
        ay += std::abs(y);
    }
    ay /= static_cast<double>(points.size());
    out.rel_rms_residual = ay > 0.0 ? std::sqrt(ss / static_cast<double>(points.size())) / ay : 0.0;
    return out;
}

std::vector<PeakRecord> peak_table(const IntensityProfile& profile, std::uint64_t mmax,
                                   double delta) {
    if (mmax < 1) throw std::invalid_argument("peak_table: mmax must be >= 1");
    const double kmax_needed = std::sqrt(static_cast<double>(mmax)) + delta;
    if (profile.kgrid.empty() || profile.kgrid.front() > 1.0 - delta ||
        profile.kgrid.back() < kmax_needed - profile.dk * 1e-9)
        throw std::out_of_range("peak_table: profile does not cover [1-delta, sqrt(mmax)+delta]");

    const double ring1 = ring_intensity(profile, 1.0, delta);
    if (ring1 == 0.0) throw std::invalid_argument("peak_table: vanishing ring at k = 1");

    std::vector<PeakRecord> records;
    for (std::uint64_t m = 1; m <= mmax; ++m) {
        if (r2(m) == 0) continue;
        PeakRecord rec;
        rec.m = m;
        rec.k = std::sqrt(static_cast<double>(m));
        auto [ell, s] = classify_k(m);
        rec.ell = ell;
        rec.s = s;
        rec.ratio = ring_intensity(profile, rec.k, delta) / ring1;
        records.push_back(rec);
    }
    return collapse_ratios(std::move(records));
}

std::vector<GroupFit> group_fits(const std::vector<PeakRecord>& records) {
    std::map<std::pair<int, int>, std::vector<std::pair<double, double>>> groups;
    for (const PeakRecord& r : records) groups[{r.ell, r.s}].emplace_back(r.k, r.ratio);
    std::vector<GroupFit> out;
    for (const auto& [key, pts] : groups) {
        if (pts.size() < 2) continue;
        out.push_back(GroupFit{key.first, key.second, fit_inverse_k(pts)});
    }
    return out;
}

void write_peaks_csv(const std::vector<PeakRecord>& records, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure("cannot open for writing: " + path);
    os << "m,ell,s,k,ratio,collapsed\n";
    for (const PeakRecord& r : records) {
        os << r.m << ',' << r.ell << ',' << r.s << ',' << format_double(r.k) << ','
           << format_double(r.ratio) << ',' << format_double(r.collapsed) << '\n';
    }
    if (!os.flush()) throw std::ios_base::failure("write failed: " + path);
}

void write_fits_csv(const std::vector<GroupFit>& fits, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure("cannot open for writing: " + path);
    os << "group_ell,group_s,c,rel_rms_residual\n";
    for (const GroupFit& g : fits) {
        os << g.ell << ',' << g.s << ',' << format_double(g.fit.c) << ','
           << format_double(g.fit.rel_rms_residual) << '\n';
    }
    if (!os.flush()) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace pinwheel
