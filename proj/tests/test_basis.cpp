#include <doctest.h>

#include "oracles.hpp"
#include "ppm/basis.hpp"
#include "ppm/linalg.hpp"
#include "ppm/power_matrices.hpp"

#include <random>

using namespace ppm;

namespace {

Rational random_rational(std::mt19937& rng)
{
    Rational r(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
    r.canonicalize();
    return r;
}

PolyCoeffs random_poly(std::mt19937& rng, const BasisConverter& conv, BasisKind basis)
{
    auto p = conv.zero(basis);
    for (auto& c : p.coeffs)
        c = (rng() % 3 == 0) ? Rational(0) : random_rational(rng);
    return p;
}

// Σ y_j <alpha_j, x>^d expanded with the oracle's polynomial multiplication.
oracle::SparsePoly expand(const BasisConverter& conv, const PolyCoeffs& y)
{
    oracle::SparsePoly total;
    for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
        if (y.coeffs[j] == 0)
            continue;
        for (const auto& [e, c] : oracle::linear_form_power(conv.order()[j].entries(), conv.d()))
            total[e] += y.coeffs[j] * c;
    }
    std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
    return total;
}

oracle::SparsePoly as_sparse(const BasisConverter& conv, const PolyCoeffs& c)
{
    oracle::SparsePoly out;
    for (std::size_t i = 0; i < c.coeffs.size(); ++i)
        if (c.coeffs[i] != 0)
            out[conv.order()[i].entries()] = c.coeffs[i];
    return out;
}

}  // namespace

TEST_CASE("x1*x2 in the linear-power basis")
{
    BasisConverter conv(2, 2);
    auto p = conv.zero(BasisKind::monomial);
    p.coeffs[conv.index_of({1, 1})] = 1;
    auto y = conv.to_linear_power(p);
    CHECK(y.basis == BasisKind::linear_power);
    CHECK(y.coeffs[conv.index_of({2, 0})] == Rational(-1, 8));
    CHECK(y.coeffs[conv.index_of({1, 1})] == Rational(1, 2));
    CHECK(y.coeffs[conv.index_of({0, 2})] == Rational(-1, 8));
    CHECK(product_monomial_coeffs(2) == y);
    CHECK(conv.from_linear_power(y) == p);
}

TEST_CASE("basis elements map to indicators")
{
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 1; d <= 4; ++d) {
            BasisConverter conv(n, d);
            for (std::size_t j = 0; j < conv.order().size(); ++j) {
                auto expansion = monomial_expansion_of_power(conv.order()[j]);
                auto y = conv.to_linear_power(expansion);
                for (std::size_t i = 0; i < y.coeffs.size(); ++i)
                    CHECK(y.coeffs[i] == (i == j ? 1 : 0));
            }
        }
}

TEST_CASE("monomial_expansion_of_power")
{
    auto e = monomial_expansion_of_power({1, 1});
    BasisConverter conv(2, 2);
    CHECK(e.coeffs[conv.index_of({2, 0})] == 1);
    CHECK(e.coeffs[conv.index_of({1, 1})] == 2);
    CHECK(e.coeffs[conv.index_of({0, 2})] == 1);

    auto top = monomial_expansion_of_power({3, 0, 0});
    BasisConverter conv33(3, 3);
    for (std::size_t i = 0; i < top.coeffs.size(); ++i)
        CHECK(top.coeffs[i] == (i == conv33.index_of({3, 0, 0}) ? Rational(27) : Rational(0)));

    // equals the alpha-row of V̂ and the oracle expansion
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 1; d <= 4; ++d) {
            BasisConverter c(n, d);
            for (std::size_t i = 0; i < c.order().size(); ++i) {
                auto exp = monomial_expansion_of_power(c.order()[i]);
                for (std::size_t j = 0; j < c.order().size(); ++j)
                    CHECK(exp.coeffs[j] == Rational(c.vhat()(i, j)));
                CHECK(as_sparse(c, exp) == oracle::linear_form_power(c.order()[i].entries(), d));
            }
        }
}

TEST_CASE("round trips and expansion oracle, n,d <= 4")
{
    std::mt19937 rng(424242);
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned d = 1; d <= 4; ++d) {
            BasisConverter conv(n, d);
            for (int trial = 0; trial < 100; ++trial) {
                auto p = random_poly(rng, conv, BasisKind::monomial);
                auto y = conv.to_linear_power(p);
                CHECK(conv.from_linear_power(y) == p);
                if (trial % 10 == 0)
                    CHECK(expand(conv, y) == as_sparse(conv, p));

                auto y2 = random_poly(rng, conv, BasisKind::linear_power);
                CHECK(conv.to_linear_power(conv.from_linear_power(y2)) == y2);
            }
        }
}

TEST_CASE("product monomial coefficients")
{
    auto one = product_monomial_coeffs(1);
    CHECK(one.coeffs == std::vector<Rational>{Rational(1)});

    auto three = product_monomial_coeffs(3);
    BasisConverter conv3(3, 3);
    CHECK(std::count_if(three.coeffs.begin(), three.coeffs.end(), [](const Rational& c) { return c != 0; }) == 10);
    CHECK(expand(conv3, three) == oracle::SparsePoly{{{1, 1, 1}, Rational(1)}});
    auto mono = conv3.from_linear_power(three);
    for (std::size_t i = 0; i < mono.coeffs.size(); ++i)
        CHECK(mono.coeffs[i] == (i == conv3.index_of({1, 1, 1}) ? 1 : 0));

    for (unsigned n = 1; n <= 5; ++n) {
        BasisConverter conv(n, n);
        auto p = conv.zero(BasisKind::monomial);
        p.coeffs[conv.index_of(Exponent(std::vector<unsigned>(n, 1)))] = 1;
        CHECK(conv.to_linear_power(p) == product_monomial_coeffs(n));
    }
}

TEST_CASE("det V̂ equals the multinomial product times det V")
{
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned d = 1; d <= 5; ++d) {
            auto set = enumerate_B(n, d);
            Integer scale = 1;
            for (const auto& a : set.members)
                scale *= multinomial(d, a);
            CHECK(det_bareiss(build_Vhat(set)) == scale * det_bareiss(build_V(set)));
        }
}

TEST_CASE("converter errors")
{
    BasisConverter conv(2, 3);
    CHECK_THROWS_AS(conv.index_of({1, 1}), std::out_of_range);
    CHECK_THROWS_AS(conv.to_linear_power(conv.zero(BasisKind::linear_power)), std::invalid_argument);
    CHECK_THROWS_AS(conv.from_linear_power(conv.zero(BasisKind::monomial)), std::invalid_argument);
    PolyCoeffs wrong{2, 2, BasisKind::monomial, std::vector<Rational>(3)};
    CHECK_THROWS_AS(conv.to_linear_power(wrong), std::invalid_argument);
    CHECK(parse_basis("linear-power") == BasisKind::linear_power);
    CHECK_THROWS_AS(parse_basis("power"), std::invalid_argument);
}

TEST_CASE("polynomial JSON round trip and validation")
{
    std::mt19937 rng(99);
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned d = 1; d <= 3; ++d) {
            BasisConverter conv(n, d);
            auto p = random_poly(rng, conv, BasisKind::linear_power);
            CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);
        }

    auto j = Json::parse(R"({"n": 2, "d": 2, "basis": "monomial",
                             "terms": [{"exponent": [1, 1], "coeff": "1"}]})");
    auto p = poly_from_json(j);
    CHECK(p.coeffs == std::vector<Rational>{0, 0, 1});
    CHECK(to_json(p).dump() ==
          R"({"n":2,"d":2,"basis":"monomial","terms":[{"exponent":[1,1],"coeff":"1/1"}]})");

    auto bad = [](const char* text) { return Json::parse(text); };
    CHECK_THROWS_AS(poly_from_json(bad(R"({"n":2,"d":2,"basis":"monomial","terms":[{"exponent":[2,1],"coeff":"1"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(bad(R"({"n":2,"d":2,"basis":"monomial","terms":[{"exponent":[1,1],"coeff":"1"},{"exponent":[1,1],"coeff":"2"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(bad(R"({"n":2,"d":2,"basis":"monomial","terms":[{"exponent":[1,1],"coeff":"x"}]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(bad(R"({"n":2,"d":2,"basis":"cubic","terms":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(bad(R"({"n":-1,"d":2,"basis":"monomial","terms":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(bad(R"({"d":2,"basis":"monomial","terms":[]})")), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_json(bad(R"({"n":2,"d":2,"basis":"monomial","terms":[{"exponent":[1,1],"coeff":"1/0"}]})")),
                    std::invalid_argument);
}
