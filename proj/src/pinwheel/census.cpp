#include "pinwheel/census.hpp"

#include <stdexcept>

namespace pinwheel {

namespace {

XPolyMatrix::Poly poly_mul(const XPolyMatrix::Poly& a, const XPolyMatrix::Poly& b) {
    if (a.empty() || b.empty()) return {};
    XPolyMatrix::Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

XPolyMatrix::Poly poly_add(const XPolyMatrix::Poly& a, const XPolyMatrix::Poly& b) {
    XPolyMatrix::Poly out = a.size() >= b.size() ? a : b;
    const XPolyMatrix::Poly& small = a.size() >= b.size() ? b : a;
    for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
    return out;
}

}  // namespace

BigInt Census::total() const {
    BigInt t = 0;
    for (const BigInt& v : fplus) t += v;
    for (const BigInt& v : fminus) t += v;
    return t;
}

Census census_recursion(int n, const BigInt& seed_plus, const BigInt& seed_minus) {
    if (n < 0) throw std::invalid_argument("census_recursion: n must be >= 0");
    std::vector<BigInt> fp{seed_plus}, fm{seed_minus};
    for (int step = 0; step < n; ++step) {
        std::vector<BigInt> np(step + 2), nm(step + 2);
        for (int k = 0; k <= step + 1; ++k) {
            if (k <= step) {
                np[k] += 2 * fp[k];
                nm[k] += 3 * fp[k];
            }
            if (k >= 1) {
                np[k] += 3 * fm[k - 1];
                nm[k] += 2 * fm[k - 1];
            }
        }
        fp = std::move(np);
        fm = std::move(nm);
    }
    return Census{n, std::move(fp), std::move(fm)};
}

XPolyMatrix XPolyMatrix::substitution() {
    XPolyMatrix m;
    m.e[0] = {BigInt(2)};
    m.e[1] = {BigInt(0), BigInt(3)};
    m.e[2] = {BigInt(3)};
    m.e[3] = {BigInt(0), BigInt(2)};
    return m;
}

XPolyMatrix XPolyMatrix::identity() {
    XPolyMatrix m;
    m.e[0] = {BigInt(1)};
    m.e[1] = {};
    m.e[2] = {};
    m.e[3] = {BigInt(1)};
    return m;
}

XPolyMatrix XPolyMatrix::operator*(const XPolyMatrix& o) const {
    XPolyMatrix r;
    r.e[0] = poly_add(poly_mul(e[0], o.e[0]), poly_mul(e[1], o.e[2]));
    r.e[1] = poly_add(poly_mul(e[0], o.e[1]), poly_mul(e[1], o.e[3]));
    r.e[2] = poly_add(poly_mul(e[2], o.e[0]), poly_mul(e[3], o.e[2]));
    r.e[3] = poly_add(poly_mul(e[2], o.e[1]), poly_mul(e[3], o.e[3]));
    return r;
}

Census census_matrix(int n, const BigInt& seed_plus, const BigInt& seed_minus) {
    if (n < 0) throw std::invalid_argument("census_matrix: n must be >= 0");
    XPolyMatrix m = XPolyMatrix::identity();
    XPolyMatrix s = XPolyMatrix::substitution();
    for (int i = 0; i < n; ++i) m = m * s;
    XPolyMatrix::Poly fp = poly_add(poly_mul(m.e[0], {seed_plus}), poly_mul(m.e[1], {seed_minus}));
    XPolyMatrix::Poly fm = poly_add(poly_mul(m.e[2], {seed_plus}), poly_mul(m.e[3], {seed_minus}));
    fp.resize(n + 1);
    fm.resize(n + 1);
    return Census{n, std::move(fp), std::move(fm)};
}

Census census_count(const Patch& p) {
    const int n = p.generation;
    Census c{n, std::vector<BigInt>(n + 1), std::vector<BigInt>(n + 1)};
    for (const Tile& t : p.tiles) {
        if (t.angle.dphi < 0 || t.angle.dphi > n)
            throw std::invalid_argument("census_count: dphi outside 0..generation");
        if (t.chi == Chirality::plus)
            c.fplus[t.angle.dphi] += 1;
        else
            c.fminus[t.angle.dphi] += 1;
    }
    return c;
}

}  // namespace pinwheel
