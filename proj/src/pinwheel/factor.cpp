#include "pinwheel/factor.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pinwheel {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1u) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1u;
    }
    return r;
}

// Everything above the trial bound goes through Miller-Rabin and Brent's
// rho, which resolve a 64-bit cofactor in microseconds; a large bound would
// only make prime cofactors walk the whole divisor range.
constexpr u64 kTrialBound = 1000;

// Brent's cycle-finding variant of Pollard rho. n must be odd composite
// and not a prime power handled elsewhere; deterministic (fixed c sweep).
u64 brent_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 ys = y, q = 1;
        const u64 m = 128;
        u64 r = 1;
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                const u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1u;
        }
        if (d == n) {
            // Backtrack one step at a time.
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    u64 d = brent_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    // Sufficient witness set for all n < 3.3e24 (Sorenson & Webster).
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<u64, int>> out;
    for (u64 p = 2; p <= kTrialBound && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        std::vector<u64> rest;
        factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            out.emplace_back(rest[i], static_cast<int>(j - i));
            i = j;
        }
    }
    return out;
}

std::uint64_t r2(u64 m) {
    if (m == 0) return 1;  // the origin
    u64 count = 4;
    for (auto [p, e] : factorize(m)) {
        if (p == 2) continue;
        if (p % 4 == 1) {
            count *= static_cast<u64>(e + 1);
        } else if (e % 2 != 0) {
            return 0;
        }
    }
    return count;
}

}  // namespace pinwheel
