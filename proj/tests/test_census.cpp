#include <doctest.h>

#include "pinwheel/census.hpp"
#include "pinwheel/tiling.hpp"

using namespace pinwheel;

namespace {

std::vector<BigInt> big(std::initializer_list<long> v) {
    return std::vector<BigInt>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("census_recursion pinned values") {
    Census c0 = census_recursion(0, 1, 1);
    CHECK(c0.fplus == big({1}));
    CHECK(c0.fminus == big({1}));
    Census c1 = census_recursion(1, 1, 1);
    CHECK(c1.fplus == big({2, 3}));
    CHECK(c1.fminus == big({3, 2}));
    Census c2 = census_recursion(2, 1, 1);
    CHECK(c2.fplus == big({4, 15, 6}));
    CHECK(c2.fminus == big({6, 15, 4}));
}

TEST_CASE("census_matrix pinned values and seed (1,0)") {
    CHECK(census_matrix(0, 1, 1) == census_recursion(0, 1, 1));
    CHECK(census_matrix(1, 1, 1) == census_recursion(1, 1, 1));
    Census c = census_matrix(2, 1, 0);
    CHECK(c.fplus == big({4, 9, 0}));
    CHECK(c.fminus == big({6, 6, 0}));
}

TEST_CASE("substitution matrix entries") {
    XPolyMatrix m = XPolyMatrix::substitution();
    CHECK(m.e[0] == XPolyMatrix::Poly{BigInt(2)});
    CHECK(m.e[1] == (XPolyMatrix::Poly{BigInt(0), BigInt(3)}));
    CHECK(m.e[2] == XPolyMatrix::Poly{BigInt(3)});
    CHECK(m.e[3] == (XPolyMatrix::Poly{BigInt(0), BigInt(2)}));
}

TEST_CASE("census_count on inflated patches, pinned") {
    Patch plus = single_seed_patch();
    Census c1 = census_count(inflate(plus, 1));
    CHECK(c1.fplus == big({2, 0}));
    CHECK(c1.fminus == big({3, 0}));

    Patch minus;
    minus.tiles.push_back(Tile{Point5(), AngleIndex(), Chirality::minus});
    Census c2 = census_count(inflate(minus, 1));
    CHECK(c2.fplus == big({0, 3}));
    CHECK(c2.fminus == big({0, 2}));

    Census c3 = census_count(inflate(census_pair_patch(), 2));
    CHECK(c3.fplus == big({4, 15, 6}));
    CHECK(c3.fminus == big({6, 15, 4}));
}

TEST_CASE("three census routes agree up to n = 4") {
    for (int n = 0; n <= 4; ++n) {
        Census direct_pair = census_count(inflate(census_pair_patch(), n));
        CHECK(direct_pair == census_recursion(n, 1, 1));
        CHECK(direct_pair == census_matrix(n, 1, 1));
        Census direct_single = census_count(inflate(single_seed_patch(), n));
        CHECK(direct_single == census_recursion(n, 1, 0));
        CHECK(direct_single == census_matrix(n, 1, 0));
    }
}

TEST_CASE("symmetry, totals and inequality chains for the pair seed") {
    for (int n = 0; n <= 12; ++n) {
        Census c = census_matrix(n, 1, 1);
        CHECK(c.total() == 2 * pow5(static_cast<unsigned>(n)));
        for (int k = 0; k <= n; ++k) CHECK(c.fplus[k] == c.fminus[n - k]);
        if (n >= 2 && n % 2 == 0) {
            const int h = n / 2;
            for (int k = 0; k < h; ++k) {
                CHECK(c.fplus[k] < c.fminus[k]);
                if (k + 1 <= h) CHECK(c.fminus[k] < c.fplus[k + 1]);
            }
            CHECK(c.fplus[h] == c.fminus[h]);
        }
        if (n % 2 == 1) {
            const int h = (n - 1) / 2;
            for (int k = 0; k < h; ++k) {
                CHECK(c.fplus[k] < c.fminus[k]);
                CHECK(c.fminus[k] < c.fplus[k + 1]);
            }
            CHECK(c.fplus[h] == c.fminus[h + 1]);
        }
        // Consequence: the chirality-summed counts increase up to floor(n/2)-1.
        for (int k = 1; k <= n / 2 - 1; ++k) {
            BigInt fk = c.fplus[k] + c.fminus[k];
            BigInt fk1 = c.fplus[k - 1] + c.fminus[k - 1];
            CHECK(fk > fk1);
        }
    }
}

TEST_CASE("census_count rejects patches outside its contract") {
    Patch p = inflate(single_seed_patch(), 1);
    p.generation = 0;  // stale generation: dphi range check must fire on minus tiles
    Patch q = inflate(p, 1);
    q.generation = 0;
    CHECK_THROWS_AS(census_count(q), std::invalid_argument);
}
