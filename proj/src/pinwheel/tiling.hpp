#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pinwheel/exact.hpp"

namespace pinwheel {

enum class Chirality : int { minus = -1, plus = +1 };

inline Chirality flip(Chirality c) {
    return c == Chirality::plus ? Chirality::minus : Chirality::plus;
}
inline int chi_sign(Chirality c) { return static_cast<int>(c); }

// One triangle: control point x, short-edge angle omega, chirality chi.
struct Tile {
    Point5 point;
    AngleIndex angle;
    Chirality chi = Chirality::plus;

    bool operator==(const Tile& o) const {
        return chi == o.chi && angle == o.angle && point == o.point;
    }
};

// The five children of t under one inflation step: scale by sqrt5 with
// rotation phi = -arctan(1/2) (multiplication by 2-i on control points),
// then dissect. Child chiralities are (chi, chi, -chi, -chi, -chi); the
// base orientation gains 2*phi exactly when chi == -1.
std::array<Tile, 5> substitute(const Tile& t);

struct RatPoint {
    BigRat x;
    BigRat y;
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

// Exact triangle vertices, right angle first. Coordinates are rationals
// with denominators 2*5^l; squared edge lengths are exactly {1, 4, 5}.
std::array<RatPoint, 3> tile_vertices(const Tile& t);

struct Patch {
    std::vector<Tile> tiles;
    int generation = 0;
    std::string seed;
};

// Single geometric seed (0, 0, +1): its first child is itself, so the
// inflation iterates are nested and converge to the fixed-point tiling.
Patch single_seed_patch();
// Two-tile combinatorial seed of Section-3 style censuses: one tile of
// each chirality at horizontal orientation (control points coincide, so
// this is not a legal geometric patch; census use only).
Patch census_pair_patch();

// Applies substitute to every tile, `steps` times. Throws std::length_error
// when the resulting tile count would exceed max_tiles.
Patch inflate(const Patch& p, int steps, std::uint64_t max_tiles = 50'000'000);

bool has_distinct_points(const Patch& p);

void write_points_csv(const Patch& p, const std::string& path);
Patch read_points_csv(const std::string& path);

}  // namespace pinwheel
