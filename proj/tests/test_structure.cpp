#include <doctest.h>

#include "reference_fixtures.hpp"
#include "ppm/power_matrices.hpp"
#include "ppm/structure.hpp"

#include <random>

using namespace ppm;

TEST_CASE("lrlex worked example")
{
    Exponent a{1, 2, 0, 3}, b{2, 1, 0, 3}, c{1, 2, 3, 0};
    CHECK(lrlex_compare(c, b) == std::strong_ordering::less);
    CHECK(lrlex_compare(b, a) == std::strong_ordering::less);
    CHECK(lrlex_compare(c, a) == std::strong_ordering::less);
    CHECK(lrlex_compare(a, c) == std::strong_ordering::greater);
    CHECK(lrlex_compare(a, a) == std::strong_ordering::equal);
    CHECK_THROWS_AS(lrlex_compare(Exponent{1}, Exponent{1, 0}), std::invalid_argument);
}

TEST_CASE("lrlex is a strict total order (random triples)")
{
    std::mt19937 rng(20201);
    for (unsigned n = 1; n <= 8; ++n)
        for (unsigned d = 1; d <= 8; ++d) {
            auto set = enumerate_B(n, d);
            std::uniform_int_distribution<std::size_t> pick(0, set.size() - 1);
            for (int trial = 0; trial < 60; ++trial) {
                const auto& x = set[pick(rng)];
                const auto& y = set[pick(rng)];
                const auto& z = set[pick(rng)];
                auto xy = lrlex_compare(x, y);
                CHECK((xy == std::strong_ordering::equal) == (x == y));
                CHECK(lrlex_compare(y, x) == 0 <=> xy);
                if (xy < 0 && lrlex_compare(y, z) < 0)
                    CHECK(lrlex_compare(x, z) < 0);
            }
        }
}

TEST_CASE("canonical_block_order")
{
    auto b22 = canonical_block_order(enumerate_B(2, 2));
    CHECK(b22.order == Order::canonical_block);
    REQUIRE(b22.size() == 3);
    CHECK(b22[0] == Exponent{2, 0});
    CHECK(b22[1] == Exponent{0, 2});
    CHECK(b22[2] == Exponent{1, 1});

    auto b1 = canonical_block_order(enumerate_B(1, 5));
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == Exponent{5});

    // the printed column order for B(3,2) is the canonical one
    CHECK(canonical_block_order(enumerate_B(3, 2)).members == fixtures::reference_B32().members);
}

TEST_CASE("block_decompose examples")
{
    auto dec = block_decompose(3, 2);
    CHECK(dec.p == 2);
    REQUIRE(dec.groups.size() == 2);
    CHECK(dec.groups[0].block == IntMatrix::from_rows({{4}}));
    CHECK(dec.groups[0].multiplicity == 3);
    CHECK(dec.groups[1].block == IntMatrix::from_rows({{1}}));
    CHECK(dec.groups[1].multiplicity == 3);
    CHECK(build_V(enumerate_B(3, 2)).permuted(dec.permutation) == fixtures::reference_V32());

    for (unsigned d = 1; d <= 6; ++d) {
        auto two = block_decompose(2, d);
        CHECK(two.groups[0].block == IntMatrix::from_rows({{ipow(d, d)}}));
        CHECK(two.groups[0].multiplicity == 2);
        if (d >= 2) {
            CHECK(two.groups[1].multiplicity == 1);
            CHECK(two.groups[1].block == power_product_matrix(enumerate_k_compositions(d, 2)));
        }
    }

    for (unsigned n = 1; n <= 5; ++n) {
        auto dec1 = block_decompose(n, 1);
        REQUIRE(dec1.groups.size() == 1);
        CHECK(dec1.groups[0].block == IntMatrix::from_rows({{1}}));
        CHECK(dec1.groups[0].multiplicity == n);
        CHECK(build_V(enumerate_B(n, 1)).permuted(dec1.permutation) == IntMatrix::identity(n));
    }
}

TEST_CASE("block structure holds exhaustively for n,d <= 6")
{
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 6; ++d) {
            auto dec = block_decompose(n, d);  // throws on any structural failure
            std::size_t total = 0;
            for (const auto& g : dec.groups)
                total += g.multiplicity * g.block.rows();
            CHECK(Integer(total) == count_weak_compositions(n, d));

            // support size never increases into a later group above the diagonal
            auto v = power_product_matrix(dec.order);
            for (std::size_t i = 0; i < v.rows(); ++i) {
                std::size_t row_nnz = 0;
                for (std::size_t j = 0; j < v.cols(); ++j) {
                    if (dec.order[i].support_size() < dec.order[j].support_size())
                        CHECK(v(i, j) == 0);
                    row_nnz += v(i, j) != 0;
                }
                unsigned k = dec.order[i].support_size();
                CHECK(Integer(row_nnz) == binomial(d + k - 1, d));
            }
            // the permutation is a bijection onto the lex order
            auto lex = enumerate_B(n, d);
            for (std::size_t i = 0; i < dec.permutation.size(); ++i)
                CHECK(lex[dec.permutation[i]] == dec.order[i]);
        }
}

TEST_CASE("nnz formula and sparsity")
{
    CHECK(nnz_formula(3, 2) == 12);
    CHECK(sparsity(3, 2) == Rational(2, 3));
    CHECK(to_decimal(sparsity(3, 2), 6) == "0.666667");
    CHECK(nnz_formula(10, 2) == 145);
    CHECK(sparsity(10, 2) == Rational(576, 605));  // 2880/3025
    CHECK(nnz_count(build_V(10, 2)) == 145);
    CHECK(nnz_count(IntMatrix::identity(7)) == 7);
    CHECK(Integer(nnz_count(build_V(4, 3))) == nnz_formula(4, 3));

    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned d = 1; d <= 6; ++d)
            CHECK(Integer(nnz_count(build_V(n, d))) == nnz_formula(n, d));
}

TEST_CASE("inverse_pattern_check")
{
    auto r32 = inverse_pattern_check(3, 2);
    CHECK(r32.holds);
    CHECK(r32.side == 6);
    CHECK(r32.nnz_v == 12);
    CHECK(r32.nnz_inverse <= r32.nnz_v);

    for (unsigned n = 1; n <= 5; ++n) {
        auto r = inverse_pattern_check(n, 1);
        CHECK(r.holds);
        CHECK(r.nnz_inverse == n);
    }
    CHECK(inverse_pattern_check(2, 4).holds);
    CHECK_THROWS_AS(inverse_pattern_check(6, 6, 100), SizeLimitError);
}

TEST_CASE("sparsity_table trends")
{
    for (const auto& row : sparsity_table({10, 10}, {2, 12}))
        if (row.d % 2 == 0)
            CHECK(row.sparsity > Rational(9, 10));

    // fixed n: sparsity falls with d once d >= n; fixed d: it rises with n
    for (unsigned n = 2; n <= 12; ++n) {
        auto rows = sparsity_table({n, n}, {n, 60});
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i].sparsity < rows[i - 1].sparsity);
    }
    for (unsigned d = 2; d <= 12; d += 2) {
        auto rows = sparsity_table({1, 60}, {d, d});
        for (std::size_t i = 1; i < rows.size(); ++i)
            CHECK(rows[i].sparsity > rows[i - 1].sparsity);
    }

    auto csv = sparsity_csv(sparsity_table({3, 3}, {2, 2}));
    CHECK(csv == "n,d,nnz,s,sparsity,fraction\n3,2,12,6,0.666667,2/3\n");
    CHECK_THROWS_AS(sparsity_table({3, 2}, {1, 1}), std::invalid_argument);
}
