#include <doctest.h>

#include "ppm/determinant.hpp"
#include "ppm/linalg.hpp"
#include "ppm/power_matrices.hpp"

using namespace ppm;

namespace {

FactoredInteger make(std::initializer_list<std::pair<long, unsigned long>> pf)
{
    FactoredInteger f;
    for (auto [p, e] : pf)
        f.factors[Integer(p)] = e;
    return f;
}

const RationalPolynomial* find_poly(const std::vector<ExponentPolynomial>& polys, long p)
{
    for (const auto& ep : polys)
        if (ep.prime == p)
            return &ep.poly;
    return nullptr;
}

}  // namespace

TEST_CASE("det_bareiss examples")
{
    CHECK(det_bareiss(IntMatrix::identity(5)) == 1);
    CHECK(det_bareiss(IntMatrix::from_rows({{4, 0, 0}, {1, 1, 1}, {0, 0, 4}})) == 16);
    CHECK(det_bareiss(build_V(3, 2)) == 64);
}

TEST_CASE("det_V examples")
{
    auto d32 = det_V_blocks(3, 2);
    CHECK(d32.value == 64);
    CHECK(d32.factored == make({{2, 6}}));
    REQUIRE(d32.blocks.size() == 2);
    CHECK(d32.blocks[0].det == 4);
    CHECK(d32.blocks[1].det == 1);

    for (unsigned n = 1; n <= 7; ++n)
        CHECK(det_V(n, 1).value() == 1);

    CHECK(det_V(2, 5) == make({{2, 8}, {3, 3}, {5, 16}}));
    CHECK(det_V(3, 3) == make({{2, 6}, {3, 12}}));
    CHECK(det_V(4, 3) == make({{2, 12}, {3, 18}}));
    CHECK(det_V(2, 6) == make({{2, 33}, {3, 26}, {5, 2}}));
    CHECK(det_V(2, 4) == make({{2, 25}, {3, 2}}));
}

TEST_CASE("composition block determinants")
{
    auto b5 = composition_block_determinants(5);
    std::vector<long> want5{3125, 108000000, 4320000, 80, 1};
    REQUIRE(b5.size() == 5);
    for (unsigned k = 0; k < 5; ++k) {
        CHECK(b5[k].k == k + 1);
        CHECK(b5[k].det == want5[k]);
        CHECK(b5[k].factored.value() == b5[k].det);
    }
    auto b6 = composition_block_determinants(6);
    REQUIRE(b6.size() == 6);
    CHECK(b6[1].det == Integer("250765325107200"));
    CHECK(b6[2].det == Integer("831979165027663872"));
    CHECK(b6[3].det == Integer("20639121408"));
    CHECK(b6[4].det == 192);
}

TEST_CASE("three determinant routes agree for n,d <= 5")
{
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned d = 1; d <= 5; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            auto blocks = det_V_blocks(n, d);
            CHECK(blocks.value != 0);
            CHECK(blocks.factored.value() == blocks.value);
            CHECK(det_V_permuted(n, d) == blocks.value);
            CHECK(det_V_full(n, d) == blocks.value);
        }
}

TEST_CASE("det_V is nonzero for n,d <= 7")
{
    for (unsigned n = 1; n <= 7; ++n)
        for (unsigned d = 1; d <= 7; ++d)
            CHECK(det_V_blocks(n, d).value != 0);
}

TEST_CASE("det_A closed form")
{
    CHECK(det_A_closed(0, 3, 5) == 1);
    CHECK(det_A_closed(1, 3, 5) == 8);
    CHECK(det_A_closed(3, 4, 2) == 559872);
    CHECK(det_bareiss(build_A(3, 4, 2)) == 559872);

    for (unsigned k = 0; k <= 6; ++k)
        for (int a = -3; a <= 6; ++a)
            for (int b = -3; b <= 6; ++b) {
                CAPTURE(k);
                CAPTURE(a);
                CAPTURE(b);
                CHECK(det_A_closed(k, a, b) == det_bareiss(build_A(k, a, b)));
            }
}

TEST_CASE("det V(2,d) closed form")
{
    CHECK(det_V2_closed(1) == 1);
    CHECK(det_V2_closed(2) == 16);
    CHECK(det_V2_closed(5) == ipow(5, 15) * 34560);
    for (unsigned d = 1; d <= 12; ++d)
        CHECK(det_V2_closed(d) == det_V_blocks(2, d).value);
}

TEST_CASE("primes_up_to")
{
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2) == std::vector<unsigned long>{2});
    CHECK(primes_up_to(30) == std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
}

TEST_CASE("prime support of det V(n,d)")
{
    for (unsigned d = 1; d <= 6; ++d)
        for (unsigned n = 1; n <= 7; ++n) {
            auto check = check_prime_support(n, d);
            CHECK(check.det.complete);
            CHECK(check.within_small_primes);
            CHECK(check.outside.empty());
        }
}

TEST_CASE("conjecture d = 5")
{
    auto report = conjecture_explore(5, 7);
    CHECK(report.verified());
    CHECK(report.routes_agree);
    CHECK(report.cross_check_passed);
    CHECK_FALSE(report.counterexample_found);
    CHECK(report.per_n.size() == 7);

    auto n = RationalPolynomial::variable();
    auto c = [](long v) { return RationalPolynomial::constant(Rational(v)); };
    auto f2 = n * (n - c(1)) * (n * n + c(3) * n + c(14)) * Rational(1, 6);
    auto f3 = n * (n - c(1)) * (n + c(1)) * Rational(1, 2);
    auto f5 = n * (n * n * n + c(10) * n * n + c(35) * n + c(74)) * Rational(1, 24);

    REQUIRE(find_poly(report.valuation_polynomials, 2));
    REQUIRE(find_poly(report.valuation_polynomials, 3));
    REQUIRE(find_poly(report.valuation_polynomials, 5));
    CHECK(*find_poly(report.valuation_polynomials, 2) == f2);
    CHECK(*find_poly(report.valuation_polynomials, 3) == f3);
    CHECK(*find_poly(report.valuation_polynomials, 5) == f5);
    CHECK(*find_poly(report.interpolated_polynomials, 2) == f2);
    CHECK(find_poly(report.valuation_polynomials, 2)->to_string() == "(n^4 + 2*n^3 + 11*n^2 - 14*n)/6");

    CHECK(f2.evaluate(2) == 8);
    CHECK(f3.evaluate(2) == 3);
    CHECK(f5.evaluate(2) == 16);
    CHECK(det_V(2, 5) == make({{2, 8}, {3, 3}, {5, 16}}));
    for (const auto& ep : report.valuation_polynomials)
        CHECK(ep.poly.degree() <= 4);
}

TEST_CASE("conjecture d = 2")
{
    auto report = conjecture_explore(2, 4);
    CHECK(report.verified());
    REQUIRE(report.valuation_polynomials.size() == 1);
    CHECK(report.valuation_polynomials[0].prime == 2);
    // det V(n,2) = 4^n, so f_2(n) = 2n
    CHECK(report.valuation_polynomials[0].poly == RationalPolynomial({Rational(0), Rational(2)}));
    for (unsigned n = 1; n <= 4; ++n)
        CHECK(det_V(n, 2).value() == ipow(4, n));

    CHECK_THROWS_AS(conjecture_explore(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(conjecture_explore(4, 5), std::invalid_argument);
}
