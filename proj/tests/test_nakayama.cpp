#include <catch2/catch_amalgamated.hpp>

#include "brauer/nakayama.hpp"

using namespace brauer;

TEST_CASE("Kupisch validation") {
    REQUIRE_NOTHROW(validate_kupisch({4, 4, 4}));
    REQUIRE_NOTHROW(validate_kupisch({2, 3}));
    REQUIRE_THROWS_AS(validate_kupisch({}), BadParameter);
    REQUIRE_THROWS_AS(validate_kupisch({1, 2}), BadParameter);
    REQUIRE_THROWS_AS(validate_kupisch({4, 2}), BadParameter); // drop of 2
    REQUIRE(validate_kupisch({4, 4, 4}).self_injective());
    REQUIRE_FALSE(validate_kupisch({2, 3}).self_injective());
}

TEST_CASE("omega formulas") {
    StarContext ctx(3, 1);
    SECTION("one step") {
        REQUIRE(omega(ctx, {0, 2}, 1) == StableCoord{2, 2});
    }
    SECTION("two steps are the translate") {
        for (int i = 0; i < 3; ++i)
            for (int j = 1; j <= 3; ++j)
                REQUIRE(omega(ctx, {i, j}, 2) == StableCoord{(i + 1) % 3, j});
    }
    SECTION("identity and inverses") {
        for (int i = 0; i < 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                StableCoord c{i, j};
                REQUIRE(omega(ctx, c, 0) == c);
                REQUIRE(omega(ctx, c, 6) == c); // 2n
                REQUIRE(omega(ctx, omega(ctx, c, 1), -1) == c);
            }
    }
    SECTION("order divides but does not pre-divide 2n") {
        StarContext big(4, 2);
        bool moved = false;
        for (int i = 0; i < 4 && !moved; ++i)
            for (int j = 1; j <= 8 && !moved; ++j)
                moved = omega(big, {i, j}, 7) != StableCoord{i, j};
        REQUIRE(moved);
    }
}

TEST_CASE("hammock membership") {
    StarContext ctx(3, 1);
    REQUIRE(hammock_hom(ctx, {0, 2}, {0, 2}));
    REQUIRE(hammock_hom(ctx, {1, 2}, {0, 2}));
    REQUIRE_FALSE(hammock_hom(ctx, {1, 1}, {0, 1}));
}

TEST_CASE("Ext^2 self-vanishing criterion") {
    StarContext ctx(3, 1);
    REQUIRE(ext2_selfvanishing(ctx, {0, 1}));
    REQUIRE_FALSE(ext2_selfvanishing(ctx, {0, 2}));
    REQUIRE(ext2_selfvanishing(ctx, {0, 3}));
}

TEST_CASE("gendo Kupisch series") {
    REQUIRE(gendo_kupisch(5, 2, {0, 2}).c ==
            std::vector<int>{15, 14, 15, 15, 14, 15, 15});
    REQUIRE(gendo_kupisch(3, 2, {}).c == std::vector<int>{7, 7, 7});
    REQUIRE(gendo_kupisch(1, 1, {0}).c == std::vector<int>{3, 2});
    REQUIRE_THROWS_AS(gendo_kupisch(2, 1, {5}), BadParameter);
    SECTION("always a valid series") {
        for (int n = 1; n <= 5; ++n)
            for (int m = 1; m <= 3; ++m)
                for (int mask = 0; mask < (1 << n); ++mask) {
                    std::set<int> pos;
                    for (int i = 0; i < n; ++i)
                        if (mask >> i & 1) pos.insert(i);
                    KupischSeries k = gendo_kupisch(n, m, pos);
                    REQUIRE(k.n() == n + static_cast<int>(pos.size()));
                }
    }
}
