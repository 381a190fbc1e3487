#pragma once

namespace pinwheel {

// Bessel function of the first kind, order zero, for 0 <= z <= 1e6.
// Absolute error <= 1e-10 against the power series evaluated in high
// precision. Power series in extended precision up to z = 12, Hankel
// amplitude/phase expansion beyond.
double bessel_j0(double z);

}  // namespace pinwheel
