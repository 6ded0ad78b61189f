#include "helpers.hpp"
#include "towers.hpp"

#include <doctest.h>

using namespace wtorelli;

TEST_SUITE("towers")
{
    TEST_CASE("tower members extend by squares of weight d/2")
    {
        auto f0 = testutil::poly({1, 1, 1, 1, 2}, 4, "x0^4 + x1^4 + x2^4 + x3^4 + x4^2");
        auto m0 = tower_base(f0, 97);
        CHECK(m0.t == 2);
        CHECK(m0.dimension == 3);
        CHECK(m0.twist == -2);
        auto m2 = extend(extend(m0));
        CHECK(m2.level == 2);
        CHECK(m2.dimension == 5);
        CHECK(m2.weight_sum == 10);
        CHECK(m2.weights.to_string() == "X_4 in P(1,1,1,1,2,2,2)");
        CHECK(m2.equation().to_string() == "x0^4 + x1^4 + x2^4 + x3^4 + x4^2 + x5^2 + x6^2");
        CHECK(lower(m2).weights == extend(m0).weights);

        CHECK(max_lowering(f0) == 1);
        auto down = lower(m0);
        CHECK(down.level == -1);
        CHECK(down.dimension == 2);
        CHECK(down.equation().to_string() == "x0^4 + x1^4 + x2^4 + x3^4");
        CHECK(HodgeVector::join(tower_hodge(down).total) == "1,20,1");
        CHECK_THROWS_AS(lower(down), Error);

        CHECK_THROWS_AS(tower_base(testutil::poly({1, 1, 1, 1, 1}, 3, "x0^3+x1^3+x2^3+x3^3+x4^3")), Error);
    }

    TEST_CASE("shifted Hodge vectors match the honestly extended ring")
    {
        for (auto [w, d, f] : std::vector<std::tuple<std::vector<int>, int, const char*>>{
                 {{1, 1, 1, 1, 2}, 4, "x0^4 + x1^4 + x2^4 + x3^4 + x4^2"},
                 {{2, 3, 4, 5, 7}, 14, "x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2"},
                 {{1, 2, 2, 3, 3}, 6, "x0^6 + x1^3 + x2^3 + x3^2 + x4^2"}}) {
            auto f0 = testutil::poly(w, d, f);
            for (int level : {1, 2}) {
                auto c = extended_ring_check(f0, level);
                CHECK(c.quasi_smooth);
                CHECK(c.hilbert_function_equal);
                CHECK(c.hodge_equal);
                CHECK(c.passed());
            }
        }
    }

    TEST_CASE("even levels of the 122 tower are trivially injective")
    {
        auto f0 = testutil::poly({2, 3, 4, 5, 7}, 14, "x0^7 + x0*x2^3 + x1^3*x3 + x2*x3^2 + x4^2");
        auto alt = alternation_check(f0, 3, 0);
        REQUIRE(alt.levels.size() == 4);
        for (const auto& lv : alt.levels) {
            CHECK(lv.trivially_injective == (lv.dimension % 2 == 0));
            if (lv.dimension % 2)
                CHECK(lv.kernel.size() == 1);
        }
        CHECK(alt.alternates);
    }

    TEST_CASE("k3 type and slice comparison for the double cover")
    {
        CHECK(k3_type_check(WeightSystem({1, 1, 1, 1, 2}, 4)));
        CHECK(k3_type_check(WeightSystem({2, 3, 4, 5, 7}, 14)));
        CHECK(k3_type_check(WeightSystem({1, 2, 3, 4, 5}, 10)));
        CHECK_FALSE(k3_type_check(WeightSystem({1, 2, 2, 3, 3}, 6)));
        CHECK_FALSE(k3_type_check(WeightSystem({1, 1, 1, 1, 1}, 3)));
        auto f0 = testutil::poly({1, 1, 1, 1, 2}, 4, "x0^4 + x1^4 + x2^4 + x3^4 + x4^2");
        CHECK(double_cover_slice_dims_match(f0, 1));
    }

    TEST_CASE("tower table covers the even-degree families")
    {
        auto t = tower_table(higher_index_families(), 0, 2);
        CHECK(t.rows.size() == 30);
        CHECK(t.skipped == std::vector<int>{96, 105, 109, 110, 117});
        for (const auto& row : t.rows) {
            CHECK(row.odd.dimension == 3);
            CHECK(row.even.dimension == 4);
            // Odd member: symmetric vector with zero ends.
            CHECK(row.odd.total.front() == 0);
            CHECK(row.odd.total[1] == row.odd.total[2]);
        }
    }
}
