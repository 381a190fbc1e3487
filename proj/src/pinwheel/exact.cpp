#include "pinwheel/exact.hpp"

#include <cmath>
#include <sstream>

namespace pinwheel {

BigInt pow5(unsigned n) {
    BigInt r = 1;
    BigInt base = 5;
    while (n) {
        if (n & 1u) r *= base;
        base *= base;
        n >>= 1u;
    }
    return r;
}

GaussInt GaussInt::mul_i_pow(int q) const {
    switch (((q % 4) + 4) % 4) {
        case 0: return *this;
        case 1: return GaussInt(-b, a);
        case 2: return GaussInt(-a, -b);
        default: return GaussInt(b, -a);
    }
}

GaussInt GaussInt::pow(unsigned e) const {
    GaussInt r(1, 0);
    GaussInt base = *this;
    while (e) {
        if (e & 1u) r = r * base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

std::string GaussInt::str() const {
    std::ostringstream os;
    os << a << (b < 0 ? "" : "+") << b << "i";
    return os.str();
}

Point5 Point5::operator+(const Point5& o) const {
    if (exp5 == o.exp5) return Point5(num + o.num, exp5);
    if (exp5 < o.exp5) {
        GaussInt lifted(num.a * pow5(o.exp5 - exp5), num.b * pow5(o.exp5 - exp5));
        return Point5(lifted + o.num, o.exp5);
    }
    GaussInt lifted(o.num.a * pow5(exp5 - o.exp5), o.num.b * pow5(exp5 - o.exp5));
    return Point5(num + lifted, exp5);
}

Point5 Point5::operator-(const Point5& o) const {
    return *this + Point5(-o.num, o.exp5);
}

double Point5::shadow_x() const {
    return num.a.convert_to<double>() / std::pow(5.0, static_cast<double>(exp5));
}

double Point5::shadow_y() const {
    return num.b.convert_to<double>() / std::pow(5.0, static_cast<double>(exp5));
}

Point5 unit_vector(const AngleIndex& theta) {
    if (theta.dphi < 0) throw std::invalid_argument("unit_vector: dphi must be >= 0");
    // e^{2i*phi} = ((2-i)/sqrt5)^2 = (3-4i)/5
    GaussInt num = GaussInt(3, -4).pow(static_cast<unsigned>(theta.dphi));
    num = num.mul_i_pow(theta.quarter);
    return Point5(num, static_cast<unsigned>(theta.dphi));
}

double SqDist::value() const {
    return m.convert_to<double>() / std::pow(5.0, static_cast<double>(L));
}

double SqDist::radius() const { return std::sqrt(value()); }

SqDist reduce_sqdist(const GaussInt& delta, unsigned exp5) {
    if (delta.is_zero()) throw std::invalid_argument("reduce_sqdist: zero displacement");
    BigInt m = delta.norm();
    unsigned L = 2 * exp5;
    while (L > 0 && m % 5 == 0) {
        m /= 5;
        --L;
    }
    return SqDist(m, L);
}

}  // namespace pinwheel
