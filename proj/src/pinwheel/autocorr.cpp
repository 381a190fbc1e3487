#include "pinwheel/autocorr.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "pinwheel/csv.hpp"

namespace pinwheel {

namespace {

// Largest lattice coordinate for the int64 engine: with |coord| <= 1e9 the
// squared pair distance (2e9)^2 * 2 = 8e18 stays inside int64.
constexpr std::int64_t kInt64CoordLimit = 1'000'000'000;
// Conservative slack for float prefilters and hull erosion.
constexpr double kHullMargin = 1e-6;

struct Shadow {
    double x, y;
};

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// --- convex hull (monotone chain, CCW) on the floating shadows ------------

double cross(const Shadow& o, const Shadow& a, const Shadow& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Shadow> convex_hull(std::vector<Shadow> pts) {
    std::sort(pts.begin(), pts.end(), [](const Shadow& a, const Shadow& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Shadow& a, const Shadow& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<Shadow> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

// Distance from an interior point to the hull boundary = min over edges of
// the inward perpendicular distance; requiring it > rmax guarantees the whole
// disk of radius rmax around the point lies inside the hull.
double min_edge_distance(const std::vector<Shadow>& hull, const Shadow& p) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Shadow& a = hull[i];
        const Shadow& b = hull[(i + 1) % hull.size()];
        const double ex = b.x - a.x, ey = b.y - a.y;
        const double len = std::hypot(ex, ey);
        if (len == 0.0) continue;
        // cross(b-a, p-a)/len: positive to the left of the edge, i.e. inside.
        const double d = (ex * (p.y - a.y) - ey * (p.x - a.x)) / len;
        best = std::min(best, d);
    }
    return best;
}

// --- pair census, templated on the lattice integer type -------------------

struct HistKey {
    std::int64_t m;
    std::uint32_t L;
    bool operator==(const HistKey& o) const { return m == o.m && L == o.L; }
};

struct HistKeyHash {
    std::size_t operator()(const HistKey& k) const {
        std::uint64_t x = static_cast<std::uint64_t>(k.m) ^ (static_cast<std::uint64_t>(k.L) << 56);
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

struct Counts {
    std::uint64_t c[4] = {0, 0, 0, 0};
};

struct CellGrid {
    double x0 = 0, y0 = 0, cell = 1;
    int nx = 1, ny = 1, reach = 1;
    std::vector<std::uint32_t> start;  // size nx*ny+1
    std::vector<std::uint32_t> items;  // point indices bucketed by cell

    int cell_x(double x) const {
        int cx = static_cast<int>(std::floor((x - x0) / cell));
        return std::clamp(cx, 0, nx - 1);
    }
    int cell_y(double y) const {
        int cy = static_cast<int>(std::floor((y - y0) / cell));
        return std::clamp(cy, 0, ny - 1);
    }
};

CellGrid build_grid(const std::vector<Shadow>& sh, double rmax) {
    CellGrid g;
    double xmin = sh[0].x, xmax = sh[0].x, ymin = sh[0].y, ymax = sh[0].y;
    for (const Shadow& s : sh) {
        xmin = std::min(xmin, s.x);
        xmax = std::max(xmax, s.x);
        ymin = std::min(ymin, s.y);
        ymax = std::max(ymax, s.y);
    }
    g.x0 = xmin;
    g.y0 = ymin;
    double cell = rmax * (1.0 + 1e-6) + 1e-12;
    // Keep the table at most a few times the point count.
    const double w = std::max(xmax - xmin, 1e-9), h = std::max(ymax - ymin, 1e-9);
    const double max_cells = 4.0 * static_cast<double>(sh.size()) + 64.0;
    if ((w / cell + 1.0) * (h / cell + 1.0) > max_cells) {
        cell = std::sqrt(w * h / max_cells) * 1.0000001;
        cell = std::max(cell, rmax * (1.0 + 1e-6) / 64.0);
    }
    g.cell = cell;
    g.nx = static_cast<int>(w / cell) + 1;
    g.ny = static_cast<int>(h / cell) + 1;
    g.reach = static_cast<int>(std::ceil((rmax * (1.0 + 1e-6) + 1e-12) / cell));
    g.start.assign(static_cast<std::size_t>(g.nx) * g.ny + 1, 0);
    std::vector<std::uint32_t> cell_of(sh.size());
    for (std::size_t i = 0; i < sh.size(); ++i) {
        cell_of[i] = static_cast<std::uint32_t>(g.cell_y(sh[i].y) * g.nx + g.cell_x(sh[i].x));
        ++g.start[cell_of[i] + 1];
    }
    for (std::size_t c = 1; c < g.start.size(); ++c) g.start[c] += g.start[c - 1];
    g.items.resize(sh.size());
    std::vector<std::uint32_t> cursor(g.start.begin(), g.start.end() - 1);
    for (std::size_t i = 0; i < sh.size(); ++i) g.items[cursor[cell_of[i]]++] = i;
    return g;
}

template <typename Int>
struct Lattice {
    std::vector<Int> x, y;
    unsigned exp5 = 0;  // common denominator 5^exp5
};

// Exact cutoff table: pair kept iff reduced m <= floor(rmax^2 * 5^L).
std::vector<BigInt> cutoff_table(double rmax, unsigned max_l) {
    BigRat r2max = BigRat(rmax) * BigRat(rmax);
    std::vector<BigInt> out(max_l + 1);
    for (unsigned l = 0; l <= max_l; ++l) {
        BigInt num = boost::multiprecision::numerator(r2max) * pow5(l);
        out[l] = num / boost::multiprecision::denominator(r2max);
    }
    return out;
}

template <typename Int>
using LocalHist = std::unordered_map<HistKey, Counts, HistKeyHash>;

// The BigInt engine reduces each pair with arbitrary precision; keys whose m
// exceeds int64 are extremely far outside desk scale, so both engines share
// the int64-keyed histogram and the exact SqDist is rebuilt at merge time.
template <typename Int>
void accumulate_pairs(const Lattice<Int>& lat, const std::vector<Shadow>& sh,
                      const std::vector<std::uint8_t>& chi_minus, const CellGrid& grid,
                      const std::vector<std::uint32_t>& refs, const std::vector<BigInt>& maxm,
                      double rmax, std::size_t begin, std::size_t end,
                      LocalHist<Int>& hist) {
    const double pre = rmax * (1.0 + 1e-9) + 1e-12;
    const double pre2 = pre * pre;
    const unsigned two_e = 2 * lat.exp5;
    std::vector<std::int64_t> maxm64(maxm.size());
    for (std::size_t l = 0; l < maxm.size(); ++l) {
        maxm64[l] = maxm[l] > std::numeric_limits<std::int64_t>::max()
                        ? std::numeric_limits<std::int64_t>::max()
                        : maxm[l].template convert_to<std::int64_t>();
    }
    for (std::size_t ri = begin; ri < end; ++ri) {
        const std::uint32_t i = refs[ri];
        const double xi = sh[i].x, yi = sh[i].y;
        const int cx = grid.cell_x(xi), cy = grid.cell_y(yi);
        const int base_chi = chi_minus[i] << 1;
        for (int gy = std::max(0, cy - grid.reach); gy <= std::min(grid.ny - 1, cy + grid.reach); ++gy) {
            for (int gx = std::max(0, cx - grid.reach); gx <= std::min(grid.nx - 1, cx + grid.reach); ++gx) {
                const std::size_t c = static_cast<std::size_t>(gy) * grid.nx + gx;
                for (std::uint32_t s = grid.start[c]; s < grid.start[c + 1]; ++s) {
                    const std::uint32_t j = grid.items[s];
                    if (j == i) continue;
                    const double dxf = xi - sh[j].x, dyf = yi - sh[j].y;
                    if (dxf * dxf + dyf * dyf > pre2) continue;
                    Int da = lat.x[i] - lat.x[j];
                    Int db = lat.y[i] - lat.y[j];
                    Int norm = da * da + db * db;
                    if (norm == 0) continue;  // coincident points carry no r>0 term
                    unsigned L = two_e;
                    while (L > 0 && norm % 5 == 0) {
                        norm /= 5;
                        --L;
                    }
                    std::int64_t m64;
                    if constexpr (std::is_same_v<Int, std::int64_t>) {
                        m64 = norm;
                    } else {
                        if (norm > std::numeric_limits<std::int64_t>::max()) continue;  // beyond any sane rmax
                        m64 = norm.template convert_to<std::int64_t>();
                    }
                    if (m64 > maxm64[L]) continue;
                    ++hist[HistKey{m64, L}].c[base_chi | chi_minus[j]];
                }
            }
        }
    }
}

template <typename Int>
PairHistogram run_engine(const Lattice<Int>& lat, const std::vector<Shadow>& sh,
                         const std::vector<std::uint8_t>& chi_minus,
                         const std::vector<std::uint32_t>& refs, double rmax, int threads) {
    const CellGrid grid = build_grid(sh, rmax);
    const std::vector<BigInt> maxm = cutoff_table(rmax, 2 * lat.exp5);

    const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(refs.size())));
    std::vector<LocalHist<Int>> local(nthreads);
    std::vector<std::thread> pool;
    const std::size_t chunk = (refs.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        const std::size_t b = std::min(refs.size(), t * chunk);
        const std::size_t e = std::min(refs.size(), b + chunk);
        pool.emplace_back([&, t, b, e] {
            accumulate_pairs(lat, sh, chi_minus, grid, refs, maxm, rmax, b, e, local[t]);
        });
    }
    for (auto& th : pool) th.join();

    LocalHist<Int> merged;
    for (auto& l : local) {
        if (merged.empty()) {
            merged = std::move(l);
            continue;
        }
        for (auto& [k, v] : l) {
            Counts& dst = merged[k];
            for (int q = 0; q < 4; ++q) dst.c[q] += v.c[q];
        }
    }

    PairHistogram out;
    out.rmax = rmax;
    out.n_ref = refs.size();
    for (std::uint32_t i : refs) out.n_ref_plus += chi_minus[i] ? 0 : 1;
    out.entries.reserve(merged.size());
    for (auto& [k, v] : merged) {
        PairHistogram::Entry e;
        e.d = SqDist(BigInt(k.m), k.L);
        for (int q = 0; q < 4; ++q) e.count[q] = v.c[q];
        out.entries.push_back(std::move(e));
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const PairHistogram::Entry& a, const PairHistogram::Entry& b) {
                  return a.d < b.d;
              });
    return out;
}

}  // namespace

PairHistogram pair_histogram(const Patch& p, double rmax, Estimator est, int threads) {
    if (!(rmax > 0.0) || !std::isfinite(rmax))
        throw std::invalid_argument("pair_histogram: rmax must be positive and finite");
    if (p.tiles.empty()) throw std::invalid_argument("pair_histogram: empty patch");

    const std::size_t n = p.tiles.size();
    unsigned max_e = 0;
    for (const Tile& t : p.tiles) max_e = std::max(max_e, t.point.exp5);

    // Common-denominator lattice coordinates, exact.
    std::vector<BigInt> bx(n), by(n);
    BigInt maxabs = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point5& pt = p.tiles[i].point;
        BigInt lift = pow5(max_e - pt.exp5);
        bx[i] = pt.num.a * lift;
        by[i] = pt.num.b * lift;
        BigInt ax = abs(bx[i]), ay = abs(by[i]);
        if (ax > maxabs) maxabs = ax;
        if (ay > maxabs) maxabs = ay;
    }

    std::vector<Shadow> sh(n);
    const double den = std::pow(5.0, static_cast<double>(max_e));
    std::vector<std::uint8_t> chi_minus(n);
    for (std::size_t i = 0; i < n; ++i) {
        sh[i] = Shadow{bx[i].convert_to<double>() / den, by[i].convert_to<double>() / den};
        chi_minus[i] = p.tiles[i].chi == Chirality::minus ? 1 : 0;
    }

    // Reference set.
    std::vector<std::uint32_t> refs;
    if (est == Estimator::all_pairs) {
        refs.resize(n);
        for (std::size_t i = 0; i < n; ++i) refs[i] = static_cast<std::uint32_t>(i);
    } else {
        std::vector<Shadow> hull = convex_hull(sh);
        if (hull.size() < 3)
            throw std::invalid_argument("eroded-core: patch has no interior");
        for (std::size_t i = 0; i < n; ++i) {
            if (min_edge_distance(hull, sh[i]) >= rmax + kHullMargin)
                refs.push_back(static_cast<std::uint32_t>(i));
        }
        if (refs.empty())
            throw std::invalid_argument(
                "eroded-core: no reference points farther than rmax from the boundary");
    }

    const int nthreads = resolve_threads(threads);
    if (maxabs <= kInt64CoordLimit) {
        Lattice<std::int64_t> lat;
        lat.exp5 = max_e;
        lat.x.resize(n);
        lat.y.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            lat.x[i] = bx[i].convert_to<std::int64_t>();
            lat.y[i] = by[i].convert_to<std::int64_t>();
        }
        return run_engine(lat, sh, chi_minus, refs, rmax, nthreads);
    }
    Lattice<BigInt> lat;
    lat.exp5 = max_e;
    lat.x = std::move(bx);
    lat.y = std::move(by);
    return run_engine(lat, sh, chi_minus, refs, rmax, nthreads);
}

RadialAutocorrelation autocorr_from_histogram(const PairHistogram& h, const Weights& w) {
    if (h.n_ref == 0) throw std::invalid_argument("autocorr: empty reference set");
    RadialAutocorrelation out;
    out.n_ref = h.n_ref;
    out.rmax = h.rmax;
    const BigRat app = w.alpha_plus * w.alpha_plus;
    const BigRat apm = w.alpha_plus * w.alpha_minus;
    const BigRat amm = w.alpha_minus * w.alpha_minus;
    const BigInt nref(h.n_ref);
    out.eta0 = (app * h.n_ref_plus + amm * (h.n_ref - h.n_ref_plus)) / nref;
    out.coeffs.reserve(h.entries.size());
    for (const PairHistogram::Entry& e : h.entries) {
        BigRat v = app * e.count[0] + apm * (e.count[1] + e.count[2]) + amm * e.count[3];
        if (v == 0) continue;
        out.coeffs.emplace_back(e.d, v / nref);
    }
    return out;
}

RadialAutocorrelation estimate_autocorr(const Patch& p, const Weights& w, double rmax,
                                        Estimator est, int threads) {
    return autocorr_from_histogram(pair_histogram(p, rmax, est, threads), w);
}

void write_autocorr_csv(const RadialAutocorrelation& ac, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure("cannot open for writing: " + path);
    os << "m,L,r,eta\n";
    os << "0,0,0," << format_rational(ac.eta0) << '\n';
    for (const auto& [d, eta] : ac.coeffs) {
        os << d.m << ',' << d.L << ',' << format_double(d.radius()) << ','
           << format_rational(eta) << '\n';
    }
    if (!os.flush()) throw std::ios_base::failure("write failed: " + path);
}

RadialAutocorrelation read_autocorr_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::ios_base::failure("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(is, line) || csv_trim(line) != "m,L,r,eta")
        throw std::invalid_argument("autocorr csv: bad header in " + path);
    RadialAutocorrelation ac;
    bool first = true;
    while (std::getline(is, line)) {
        if (csv_trim(line).empty()) continue;
        auto f = csv_split(line, 4, "autocorr csv");
        if (first) {
            if (f[0] != "0") throw std::invalid_argument("autocorr csv: first row must be r = 0");
            ac.eta0 = parse_rational(f[3]);
            first = false;
            continue;
        }
        long level = std::stol(f[1]);
        if (level < 0 || level > 100000)
            throw std::invalid_argument("autocorr csv: L must be small nonnegative");
        SqDist d(BigInt(f[0]), static_cast<unsigned>(level));
        if (d.m <= 0) throw std::invalid_argument("autocorr csv: m must be positive");
        ac.coeffs.emplace_back(d, parse_rational(f[3]));
        ac.rmax = std::max(ac.rmax, d.radius());
    }
    if (first) throw std::invalid_argument("autocorr csv: missing r = 0 row");
    return ac;
}

}  // namespace pinwheel
