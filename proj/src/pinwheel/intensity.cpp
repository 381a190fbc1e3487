#include "pinwheel/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pinwheel/bessel.hpp"
#include "pinwheel/csv.hpp"
#include "pinwheel/factor.hpp"

namespace pinwheel {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

IntensityProfile intensity_profile(const RadialAutocorrelation& ac, double kmax, double dk,
                                   int threads) {
    if (!(dk > 0.0)) throw std::invalid_argument("intensity_profile: dk must be positive");
    if (!(kmax >= dk)) throw std::invalid_argument("intensity_profile: kmax must be >= dk");

    // Coefficients go to floating point once, here; entries are already
    // sorted by radius, which fixes the summation order per grid point.
    std::vector<double> radius(ac.coeffs.size()), eta(ac.coeffs.size());
    for (std::size_t i = 0; i < ac.coeffs.size(); ++i) {
        radius[i] = ac.coeffs[i].first.radius();
        eta[i] = ac.coeffs[i].second.convert_to<double>();
    }
    const double eta0 = ac.eta0.convert_to<double>();

    IntensityProfile out;
    out.dk = dk;
    {
        std::ostringstream os;
        os << "autocorr: n_ref=" << ac.n_ref << " rmax=" << format_double(ac.rmax)
           << " terms=" << ac.coeffs.size();
        out.provenance = os.str();
    }
    const std::size_t npts = static_cast<std::size_t>(std::floor(kmax / dk + 1e-9)) + 1;
    out.kgrid.resize(npts);
    out.values.resize(npts);
    for (std::size_t i = 0; i < npts; ++i) out.kgrid[i] = static_cast<double>(i) * dk;

    const int nthreads = std::max(1, std::min<int>(resolve_threads(threads),
                                                   static_cast<int>(npts)));
    std::vector<std::thread> pool;
    const std::size_t chunk = (npts + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        const std::size_t b = std::min(npts, t * chunk);
        const std::size_t e = std::min(npts, b + chunk);
        pool.emplace_back([&, b, e] {
            for (std::size_t i = b; i < e; ++i) {
                const double k = out.kgrid[i];
                double sum = eta0;
                for (std::size_t j = 0; j < radius.size(); ++j)
                    sum += eta[j] * bessel_j0(kTwoPi * k * radius[j]);
                out.values[i] = sum;
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

double ring_intensity(const IntensityProfile& p, double k0, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("ring_intensity: delta must be positive");
    if (p.kgrid.size() < 2) throw std::invalid_argument("ring_intensity: profile too short");
    if (delta < p.dk * (1.0 - 1e-12))
        throw std::invalid_argument("ring_intensity: delta must be >= the grid spacing");
    const double a = k0 - delta, b = k0 + delta;
    const double eps = p.dk * 1e-9;
    if (a < p.kgrid.front() - eps || b > p.kgrid.back() + eps)
        throw std::out_of_range("ring_intensity: window outside the profile grid");

    auto interp = [&](double x) {
        double pos = (x - p.kgrid.front()) / p.dk;
        std::size_t i = static_cast<std::size_t>(std::clamp(
            std::floor(pos), 0.0, static_cast<double>(p.kgrid.size() - 2)));
        double f = pos - static_cast<double>(i);
        f = std::clamp(f, 0.0, 1.0);
        return p.values[i] * (1.0 - f) + p.values[i + 1] * f;
    };

    // Piecewise-linear integral: partial trapezoids at the window ends,
    // whole cells in between.
    const std::size_t first = static_cast<std::size_t>(std::clamp(
        std::ceil((a - p.kgrid.front()) / p.dk - 1e-9), 0.0,
        static_cast<double>(p.kgrid.size() - 1)));
    const std::size_t last = static_cast<std::size_t>(std::clamp(
        std::floor((b - p.kgrid.front()) / p.dk + 1e-9), 0.0,
        static_cast<double>(p.kgrid.size() - 1)));
    double total = 0.0;
    if (first > last) {  // window inside a single cell
        return 0.5 * (interp(a) + interp(b)) * (b - a);
    }
    const double ka = p.kgrid[first], kb = p.kgrid[last];
    if (ka > a) total += 0.5 * (interp(a) + p.values[first]) * (ka - a);
    for (std::size_t i = first; i < last; ++i)
        total += 0.5 * (p.values[i] + p.values[i + 1]) * p.dk;
    if (b > kb) total += 0.5 * (p.values[last] + interp(b)) * (b - kb);
    return total;
}

PowderReference powder_reference(std::uint64_t mmax, std::optional<double> normalize_to) {
    if (mmax < 1) throw std::invalid_argument("powder_reference: mmax must be >= 1");
    PowderReference out;
    for (std::uint64_t m = 1; m <= mmax; ++m) {
        std::uint64_t w = r2(m);
        if (w == 0) continue;
        out.rings.push_back({m, std::sqrt(static_cast<double>(m)), static_cast<double>(w)});
    }
    if (normalize_to) {
        out.scale = *normalize_to / out.rings.front().weight;  // ring at k = 1 (m = 1)
        for (auto& r : out.rings) r.weight *= out.scale;
    }
    return out;
}

void write_intensity_csv(const IntensityProfile& p, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure("cannot open for writing: " + path);
    os << "k,I\n";
    for (std::size_t i = 0; i < p.kgrid.size(); ++i)
        os << format_double(p.kgrid[i]) << ',' << format_double(p.values[i]) << '\n';
    if (!os.flush()) throw std::ios_base::failure("write failed: " + path);
}

IntensityProfile read_intensity_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::ios_base::failure("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(is, line) || csv_trim(line) != "k,I")
        throw std::invalid_argument("intensity csv: bad header in " + path);
    IntensityProfile p;
    while (std::getline(is, line)) {
        if (csv_trim(line).empty()) continue;
        auto f = csv_split(line, 2, "intensity csv");
        p.kgrid.push_back(std::stod(f[0]));
        p.values.push_back(std::stod(f[1]));
    }
    if (p.kgrid.size() < 2) throw std::invalid_argument("intensity csv: too few samples");
    p.dk = p.kgrid[1] - p.kgrid[0];
    for (std::size_t i = 1; i < p.kgrid.size(); ++i) {
        if (std::abs(p.kgrid[i] - p.kgrid[i - 1] - p.dk) > 1e-9 * std::max(1.0, p.dk))
            throw std::invalid_argument("intensity csv: grid must be uniform");
    }
    p.provenance = "file:" + path;
    return p;
}

void write_powder_csv(const PowderReference& p, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure("cannot open for writing: " + path);
    os << "k,weight\n";
    for (const auto& r : p.rings)
        os << format_double(r.k) << ',' << format_double(r.weight) << '\n';
    if (!os.flush()) throw std::ios_base::failure("write failed: " + path);
}

}  // namespace pinwheel
