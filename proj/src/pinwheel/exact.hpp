#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace pinwheel {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt pow5(unsigned n);

// Gaussian integer a + b*i with arbitrary-precision components.
struct GaussInt {
    BigInt a;
    BigInt b;

    GaussInt() = default;
    GaussInt(BigInt re, BigInt im) : a(std::move(re)), b(std::move(im)) {}
    GaussInt(long re, long im) : a(re), b(im) {}

    bool is_zero() const { return a == 0 && b == 0; }

    GaussInt conj() const { return GaussInt(a, -b); }

    // norm(a+bi) = a^2 + b^2; multiplicative.
    BigInt norm() const { return a * a + b * b; }

    // (a+bi)/5 is again a Gaussian integer exactly when 5 | a and 5 | b.
    bool divisible_by_5() const { return a % 5 == 0 && b % 5 == 0; }
    GaussInt div5() const { return GaussInt(a / 5, b / 5); }

    GaussInt operator+(const GaussInt& o) const { return GaussInt(a + o.a, b + o.b); }
    GaussInt operator-(const GaussInt& o) const { return GaussInt(a - o.a, b - o.b); }
    GaussInt operator-() const { return GaussInt(-a, -b); }
    GaussInt operator*(const GaussInt& o) const {
        return GaussInt(a * o.a - b * o.b, a * o.b + b * o.a);
    }
    GaussInt& operator+=(const GaussInt& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    bool operator==(const GaussInt& o) const { return a == o.a && b == o.b; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }

    // Multiplication by i^q, q mod 4.
    GaussInt mul_i_pow(int q) const;

    GaussInt pow(unsigned e) const;

    std::string str() const;
};

// Exact angle quarter*(pi/2) + dphi*(2*phi) with phi = -arctan(1/2).
// 2*phi/pi is irrational, so the representation is unique; dphi is kept
// without modular reduction.
struct AngleIndex {
    int quarter = 0;  // mod 4, stored in 0..3
    int dphi = 0;     // >= 0 for tiling use

    AngleIndex() = default;
    AngleIndex(int q, int d) : quarter(((q % 4) + 4) % 4), dphi(d) {}

    AngleIndex operator+(const AngleIndex& o) const {
        return AngleIndex(quarter + o.quarter, dphi + o.dphi);
    }
    bool operator==(const AngleIndex& o) const {
        return quarter == o.quarter && dphi == o.dphi;
    }
    bool operator!=(const AngleIndex& o) const { return !(*this == o); }
};

// num / 5^exp5, normalized so exp5 == 0 or num is not divisible by 5.
struct Point5 {
    GaussInt num;
    unsigned exp5 = 0;

    Point5() = default;
    Point5(GaussInt n, unsigned e) : num(std::move(n)), exp5(e) { normalize(); }

    void normalize() {
        while (exp5 > 0 && num.divisible_by_5()) {
            num = num.div5();
            --exp5;
        }
    }

    bool is_zero() const { return num.is_zero(); }

    Point5 operator+(const Point5& o) const;
    Point5 operator-(const Point5& o) const;
    Point5 operator*(const Point5& o) const {
        return Point5(num * o.num, exp5 + o.exp5);
    }
    Point5 scaled(const GaussInt& g) const { return Point5(num * g, exp5); }

    bool operator==(const Point5& o) const {
        return exp5 == o.exp5 && num == o.num;
    }
    bool operator!=(const Point5& o) const { return !(*this == o); }

    double shadow_x() const;
    double shadow_y() const;
};

// Exact e^{i*theta} = i^quarter * ((3-4i)/5)^dphi. Unit modulus:
// norm(num) == 5^(2*exp5).
Point5 unit_vector(const AngleIndex& theta);

// Squared distance m / 5^L, reduced (L == 0 or 5 does not divide m);
// m is always a sum of two squares since it arises as a Gaussian norm.
struct SqDist {
    BigInt m;
    unsigned L = 0;

    SqDist() = default;
    SqDist(BigInt mm, unsigned l) : m(std::move(mm)), L(l) {}

    bool operator==(const SqDist& o) const { return L == o.L && m == o.m; }
    bool operator!=(const SqDist& o) const { return !(*this == o); }
    // Ordered by the represented value m/5^L.
    bool operator<(const SqDist& o) const {
        BigInt lhs = m * pow5(o.L);
        BigInt rhs = o.m * pow5(L);
        return lhs < rhs;
    }

    double value() const;   // m/5^L as double
    double radius() const;  // sqrt(m/5^L)
};

// (m, L) with m/5^L = norm(delta)/5^(2*exp5), reduced. Rejects delta == 0:
// the r = 0 term of an autocorrelation is bookkept separately.
SqDist reduce_sqdist(const GaussInt& delta, unsigned exp5);

}  // namespace pinwheel
