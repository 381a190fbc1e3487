#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pinwheel {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Prime factorization of n >= 1 as (prime, exponent) pairs, primes strictly
// increasing. Trial division up to 1e6, then Miller-Rabin plus Brent's rho
// for the cofactor.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Number of representations m = p^2 + q^2 with (p,q) in Z^2 (ordered, signed).
// Computed from the factorization: zero if any prime = 3 (mod 4) occurs to an
// odd power, else 4 * prod(e_p + 1) over primes = 1 (mod 4).
std::uint64_t r2(std::uint64_t m);

}  // namespace pinwheel
