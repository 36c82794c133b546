#include <doctest.h>

#include "reference_fixtures.hpp"
#include "ppm/power_matrices.hpp"

using namespace ppm;

TEST_CASE("power_product follows 0^0 = 1")
{
    auto zero = IntMatrix::from_rows({{0}});
    CHECK(power_product(zero, zero) == IntMatrix::from_rows({{1}}));

    auto row = IntMatrix::from_rows({{2, 0, 0}});
    auto col_a = IntMatrix::from_rows({{0}, {2}, {0}});
    auto col_b = IntMatrix::from_rows({{2}, {0}, {0}});
    CHECK(power_product(row, col_a)(0, 0) == 0);
    CHECK(power_product(row, col_b)(0, 0) == 4);

    // an all-zero exponent column yields all ones
    auto base = IntMatrix::from_rows({{0, 3}, {5, 0}, {0, 0}});
    auto ones = power_product(base, IntMatrix::from_rows({{0}, {0}}));
    CHECK(ones == IntMatrix::from_rows({{1}, {1}, {1}}));

    CHECK(power_product(Exponent{2, 0, 0}, Exponent{0, 2, 0}) == 0);
    CHECK(power_product(Exponent{2, 0, 0}, Exponent{2, 0, 0}) == 4);
}

TEST_CASE("power_product rejects bad input")
{
    auto a = IntMatrix::from_rows({{1, 2}});
    CHECK_THROWS_AS(power_product(a, IntMatrix::from_rows({{1}})), std::invalid_argument);
    CHECK_THROWS_AS(power_product(a, IntMatrix::from_rows({{1}, {-1}})), std::invalid_argument);
}

TEST_CASE("build_V reproduces the printed V(3,2)")
{
    auto v = build_V(fixtures::reference_B32());
    CHECK(v == fixtures::reference_V32());
    REQUIRE(v.index());
    CHECK(v.index()->members == fixtures::reference_B32().members);
}

TEST_CASE("build_V small cases")
{
    for (unsigned d = 1; d <= 6; ++d)
        CHECK(build_V(1, d) == IntMatrix::from_rows({{ipow(d, d)}}));

    ExponentSet order{2, 2, {{0, 2}, {1, 1}, {2, 0}}, Order::input};
    CHECK(build_V(order) == IntMatrix::from_rows({{4, 0, 0}, {1, 1, 1}, {0, 0, 4}}));

    ExponentSet broken{2, 2, {{0, 2}, {1, 1}, {1, 1}}, Order::input};
    CHECK_THROWS_AS(build_V(broken), std::invalid_argument);
}

TEST_CASE("V entries vanish exactly when supports are not nested")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 6; ++d) {
            auto order = enumerate_B(n, d);
            auto v = build_V(order);
            Integer bound = ipow(d, d);
            for (std::size_t i = 0; i < order.size(); ++i) {
                CHECK(v(i, i) >= 1);
                for (std::size_t j = 0; j < order.size(); ++j) {
                    bool nested = (order[j].support_mask() & ~order[i].support_mask()) == 0;
                    CHECK((v(i, j) != 0) == nested);
                    CHECK(v(i, j) >= 0);
                    CHECK(v(i, j) <= bound);
                    // machine fast path agrees with the general routine
                    CHECK(v(i, j) == power_product(order[i], order[j]));
                }
            }
        }
}

TEST_CASE("entries beyond 64 bits")
{
    auto v = build_V(1, 20);
    CHECK(v(0, 0) == ipow(20, 20));
    auto v2 = build_V(2, 17);
    CHECK(v2(0, 0) == ipow(17, 17));
}

TEST_CASE("build_Vhat small cases")
{
    for (unsigned d = 1; d <= 5; ++d)
        CHECK(build_Vhat(enumerate_B(1, d)) == IntMatrix::from_rows({{ipow(d, d)}}));
    ExponentSet order{2, 2, {{0, 2}, {1, 1}, {2, 0}}, Order::input};
    CHECK(build_Vhat(order) == IntMatrix::from_rows({{4, 0, 0}, {1, 2, 1}, {0, 0, 4}}));
}

TEST_CASE("V̂ entrywise equals V scaled by multinomials")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 6; ++d) {
            auto order = enumerate_B(n, d);
            CHECK(build_Vhat(order) == scale_by_multinomials(build_V(order)));
        }
    CHECK_THROWS_AS(scale_by_multinomials(IntMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("build_A")
{
    CHECK(build_A(0, 5, 7) == IntMatrix::from_rows({{1}}));
    for (int a = -3; a <= 4; ++a)
        for (int b = -3; b <= 4; ++b)
            CHECK(build_A(1, a, b) == IntMatrix::from_rows({{a, b}, {a - 1, b + 1}}));
    CHECK(build_A(2, 3, 1) == IntMatrix::from_rows({{9, 3, 1}, {4, 4, 4}, {1, 3, 9}}));
}
