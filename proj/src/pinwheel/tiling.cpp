#include "pinwheel/tiling.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pinwheel/csv.hpp"

namespace pinwheel {

namespace {

const GaussInt kSqrt5RotPhi(2, -1);  // sqrt5 * e^{i*phi}

}  // namespace

std::array<Tile, 5> substitute(const Tile& t) {
    // Base orientation omega' = omega + phi - chi*phi.
    AngleIndex base = t.angle;
    if (t.chi == Chirality::minus) base = base + AngleIndex(0, 1);

    const int s = chi_sign(t.chi);  // +-1 quarter turn selector
    Point5 scaled = t.point.scaled(kSqrt5RotPhi);
    Point5 u_side = unit_vector(base + AngleIndex(s, 0));     // base + chi*pi/2
    Point5 u_back = unit_vector(base + AngleIndex(2, 0));     // base + pi
    Point5 u_front = unit_vector(base + AngleIndex(-s, 0));   // base - chi*pi/2

    AngleIndex turned = base + AngleIndex(2, 0);

    return {
        Tile{scaled, base, t.chi},
        Tile{scaled + u_side, turned, t.chi},
        Tile{scaled + u_side + u_side, turned, flip(t.chi)},
        Tile{scaled + u_back, turned, flip(t.chi)},
        Tile{scaled + u_front, base + AngleIndex(-s, 0), flip(t.chi)},
    };
}

std::array<RatPoint, 3> tile_vertices(const Tile& t) {
    // Control point sits at (1/2,1/2) from the right-angle corner, measured
    // in the tile's own frame. The chi=-1 prototile is the mirror image of
    // the chi=+1 one, so its vertex offsets are the complex conjugates;
    // only with that pairing do the five children of the inflation rule
    // tile the sqrt5-scaled parent. Offsets (doubled), right angle first:
    //   chi=+1: (-1-i), (1-i), (-1+3i)      chi=-1: (-1+i), (1+i), (-1-3i)
    const bool plus = t.chi == Chirality::plus;
    const GaussInt v2[3] = {
        GaussInt(-1, plus ? -1 : 1),
        GaussInt(1, plus ? -1 : 1),
        GaussInt(-1, plus ? 3 : -3),
    };
    Point5 rot = unit_vector(t.angle);
    std::array<RatPoint, 3> out;
    BigInt den_pt = pow5(t.point.exp5);
    for (int i = 0; i < 3; ++i) {
        Point5 off = rot.scaled(v2[i]);  // 2 * R_omega * v_i, exact
        BigInt den_off = 2 * pow5(off.exp5);
        out[i].x = BigRat(t.point.num.a, den_pt) + BigRat(off.num.a, den_off);
        out[i].y = BigRat(t.point.num.b, den_pt) + BigRat(off.num.b, den_off);
    }
    return out;
}

Patch single_seed_patch() {
    Patch p;
    p.tiles.push_back(Tile{Point5(), AngleIndex(), Chirality::plus});
    p.seed = "single";
    return p;
}

Patch census_pair_patch() {
    Patch p;
    p.tiles.push_back(Tile{Point5(), AngleIndex(), Chirality::plus});
    p.tiles.push_back(Tile{Point5(), AngleIndex(), Chirality::minus});
    p.seed = "census-pair";
    return p;
}

Patch inflate(const Patch& p, int steps, std::uint64_t max_tiles) {
    if (steps < 0) throw std::invalid_argument("inflate: steps must be >= 0");
    std::uint64_t target = p.tiles.size();
    for (int i = 0; i < steps; ++i) {
        if (target > max_tiles / 5) throw std::length_error("inflate: tile budget exceeded");
        target *= 5;
    }
    Patch out;
    out.generation = p.generation + steps;
    out.seed = p.seed;
    out.tiles = p.tiles;
    for (int step = 0; step < steps; ++step) {
        std::vector<Tile> next;
        next.reserve(out.tiles.size() * 5);
        for (const Tile& t : out.tiles) {
            auto children = substitute(t);
            next.insert(next.end(), children.begin(), children.end());
        }
        out.tiles = std::move(next);
    }
    return out;
}

bool has_distinct_points(const Patch& p) {
    std::vector<const Point5*> pts;
    pts.reserve(p.tiles.size());
    for (const Tile& t : p.tiles) pts.push_back(&t.point);
    std::sort(pts.begin(), pts.end(), [](const Point5* l, const Point5* r) {
        if (l->exp5 != r->exp5) return l->exp5 < r->exp5;
        if (l->num.a != r->num.a) return l->num.a < r->num.a;
        return l->num.b < r->num.b;
    });
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (*pts[i] == *pts[i - 1]) return false;
    }
    return true;
}

void write_points_csv(const Patch& p, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::ios_base::failure("cannot open for writing: " + path);
    os << "a,b,exp5,quarter,dphi,chi\n";
    for (const Tile& t : p.tiles) {
        os << t.point.num.a << ',' << t.point.num.b << ',' << t.point.exp5 << ','
           << t.angle.quarter << ',' << t.angle.dphi << ',' << chi_sign(t.chi) << '\n';
    }
    if (!os.flush()) throw std::ios_base::failure("write failed: " + path);
}

Patch read_points_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::ios_base::failure("cannot open for reading: " + path);
    std::string line;
    if (!std::getline(is, line) || csv_trim(line) != "a,b,exp5,quarter,dphi,chi")
        throw std::invalid_argument("points csv: bad header in " + path);
    Patch p;
    p.seed = "file:" + path;
    while (std::getline(is, line)) {
        if (csv_trim(line).empty()) continue;
        auto f = csv_split(line, 6, "points csv");
        long exp5 = std::stol(f[2]);
        long dphi = std::stol(f[4]);
        if (exp5 < 0 || exp5 > 100000 || dphi < 0 || dphi > 100000)
            throw std::invalid_argument("points csv: exp5 and dphi must be small nonnegative");
        Tile t;
        t.point = Point5(GaussInt(BigInt(f[0]), BigInt(f[1])), static_cast<unsigned>(exp5));
        t.angle = AngleIndex(std::stoi(f[3]), static_cast<int>(dphi));
        int chi = std::stoi(f[5]);
        if (chi != 1 && chi != -1) throw std::invalid_argument("points csv: chi must be +-1");
        t.chi = chi == 1 ? Chirality::plus : Chirality::minus;
        p.tiles.push_back(std::move(t));
    }
    return p;
}

}  // namespace pinwheel
