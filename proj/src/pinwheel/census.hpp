#pragma once

#include <array>
#include <vector>

#include "pinwheel/exact.hpp"
#include "pinwheel/tiling.hpp"

namespace pinwheel {

// Orientation census after n inflation steps: fplus[k]/fminus[k] count the
// tiles of each chirality whose angle carries orientation factor x^k
// (k = dphi; quarter turns are ignored).
struct Census {
    int n = 0;
    std::vector<BigInt> fplus;
    std::vector<BigInt> fminus;

    bool operator==(const Census& o) const {
        return n == o.n && fplus == o.fplus && fminus == o.fminus;
    }
    BigInt total() const;
};

// Coefficient recursion, in the form forced by the substitution matrix:
//   f+_{n+1}(k) = 2 f+_n(k)   + 3 f-_n(k-1)
//   f-_{n+1}(k) = 3 f+_n(k)   + 2 f-_n(k-1)
// (a chi=+1 parent yields 2 plus and 3 minus children at its own x^k; a
// chi=-1 parent yields 3 plus and 2 minus children at x^{k+1}).
Census census_recursion(int n, const BigInt& seed_plus, const BigInt& seed_minus);

// 2x2 matrix of integer polynomials in x; the substitution matrix is
// [[2, 3x], [3, 2x]].
struct XPolyMatrix {
    using Poly = std::vector<BigInt>;
    std::array<Poly, 4> e;  // row-major

    static XPolyMatrix substitution();
    static XPolyMatrix identity();
    XPolyMatrix operator*(const XPolyMatrix& o) const;
};

// Same census via explicit powers of the substitution matrix applied to the
// seed vector; must agree with census_recursion on all inputs.
Census census_matrix(int n, const BigInt& seed_plus, const BigInt& seed_minus);

// Direct count over a patch produced by inflate() from a seed whose tiles
// all have dphi = 0; groups tiles by (chirality, dphi).
Census census_count(const Patch& p);

}  // namespace pinwheel
