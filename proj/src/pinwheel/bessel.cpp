#include "pinwheel/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace pinwheel {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;
constexpr double kSeriesCut = 12.0;

// sum_j (-1)^j (z/2)^{2j} / (j!)^2. At z = 12 the largest term is ~4.2e3,
// so long double accumulation keeps the cancellation error below 1e-15.
double j0_series(double z) {
    const long double q = (long double)z * z / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int j = 1; j < 80; ++j) {
        term *= -q / ((long double)j * j);
        sum += term;
        if (fabsl(term) < 1e-25L) break;
    }
    return static_cast<double>(sum);
}

// Hankel expansion, Gray-Mathews form:
//   J0(z) = (pi z)^{-1/2} [cos z (P - Q) + sin z (P + Q)]
// with P = 1 - 9/(128 z^2) + ...,  Q = 1/(8z) - 75/(1024 z^3) + ...
// Terms decrease until m ~ z; truncating at the smallest term leaves an
// error ~e^{-2z}, below 1e-11 for z > 12.
double j0_asymptotic(double z) {
    const long double x = z;
    const long double zz = x * x;
    long double p = 1.0L, q = 1.0L / (8.0L * x);
    long double pterm = p, qterm = q;
    for (int m = 1; m < 40; ++m) {
        const long double fm = 4 * m;
        const long double pfac =
            (fm - 3) * (fm - 3) * (fm - 1) * (fm - 1) / ((2 * m - 1) * 128.0L * m);
        const long double qfac =
            (fm - 1) * (fm - 1) * (fm + 1) * (fm + 1) / ((2 * m + 1) * 128.0L * m);
        if (pfac >= zz && qfac >= zz) break;  // past the smallest term
        pterm *= -pfac / zz;
        qterm *= -qfac / zz;
        p += pterm;
        q += qterm;
        if (fabsl(pterm) < 1e-22L && fabsl(qterm) < 1e-22L) break;
    }
    const long double c = cosl(x), s = sinl(x);
    return static_cast<double>((c * (p - q) + s * (p + q)) / sqrtl(kPi * x));
}

}  // namespace

double bessel_j0(double z) {
    if (!(z >= 0.0)) throw std::domain_error("bessel_j0: argument must be >= 0");
    if (z > 1e6) throw std::domain_error("bessel_j0: argument above 1e6");
    return z <= kSeriesCut ? j0_series(z) : j0_asymptotic(z);
}

}  // namespace pinwheel
