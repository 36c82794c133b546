#include "ppm/basis.hpp"

#include "ppm/power_matrices.hpp"
#include "ppm/structure.hpp"

#include <stdexcept>

namespace ppm {

std::string to_string(BasisKind kind)
{
    return kind == BasisKind::monomial ? "monomial" : "linear-power";
}

BasisKind parse_basis(const std::string& text)
{
    if (text == "monomial")
        return BasisKind::monomial;
    if (text == "linear-power")
        return BasisKind::linear_power;
    throw std::invalid_argument("unknown basis '" + text + "'");
}

namespace {

std::vector<BlockRange> diagonal_blocks_of(const ExponentSet& canonical)
{
    // One block per support pattern; canonical order keeps patterns contiguous.
    std::vector<BlockRange> blocks;
    for (std::size_t i = 0; i < canonical.size(); ++i) {
        if (i == 0 || canonical[i].support_mask() != canonical[i - 1].support_mask())
            blocks.push_back({i, 0});
        ++blocks.back().size;
    }
    return blocks;
}

ExponentSet canonical_B(unsigned n, unsigned d)
{
    return canonical_block_order(enumerate_B(n, d));
}

}  // namespace

BasisConverter::BasisConverter(unsigned n, unsigned d)
    : order_(canonical_B(n, d)),
      vhat_(build_Vhat(order_)),
      transposed_solver_(vhat_.transposed(), diagonal_blocks_of(order_), Triangle::upper)
{
    for (std::size_t i = 0; i < order_.size(); ++i)
        position_.emplace(order_[i], i);
}

std::size_t BasisConverter::index_of(const Exponent& alpha) const
{
    auto it = position_.find(alpha);
    if (it == position_.end())
        throw std::out_of_range("exponent " + to_string(alpha) + " is not in B(" + std::to_string(n()) + "," +
                                std::to_string(d()) + ")");
    return it->second;
}

PolyCoeffs BasisConverter::zero(BasisKind basis) const
{
    return {n(), d(), basis, std::vector<Rational>(order_.size())};
}

void BasisConverter::check_shape(const PolyCoeffs& p, BasisKind expected) const
{
    if (p.basis != expected)
        throw std::invalid_argument("polynomial is in the " + to_string(p.basis) + " basis, expected " +
                                    to_string(expected));
    if (p.n != n() || p.d != d() || p.coeffs.size() != order_.size())
        throw std::invalid_argument("polynomial shape does not match the converter");
}

PolyCoeffs BasisConverter::to_linear_power(const PolyCoeffs& monomial) const
{
    check_shape(monomial, BasisKind::monomial);
    return {n(), d(), BasisKind::linear_power, transposed_solver_.solve(monomial.coeffs)};
}

PolyCoeffs BasisConverter::from_linear_power(const PolyCoeffs& linear_power) const
{
    check_shape(linear_power, BasisKind::linear_power);
    PolyCoeffs out = zero(BasisKind::monomial);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const auto& y = linear_power.coeffs[i];
        if (sgn(y) == 0)
            continue;
        auto row = vhat_.row(i);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (sgn(row[j]) != 0)
                out.coeffs[j] += y * Rational(row[j]);
    }
    return out;
}

PolyCoeffs monomial_expansion_of_power(const Exponent& alpha)
{
    const unsigned n = static_cast<unsigned>(alpha.size());
    const unsigned d = alpha.degree();
    ExponentSet order = canonical_B(n, d);
    PolyCoeffs out{n, d, BasisKind::monomial, std::vector<Rational>(order.size())};
    for (std::size_t j = 0; j < order.size(); ++j)
        out.coeffs[j] = Rational(multinomial(d, order[j]) * power_product(alpha, order[j]));
    return out;
}

PolyCoeffs product_monomial_coeffs(unsigned n)
{
    if (n == 0)
        throw std::invalid_argument("product_monomial_coeffs: n must be positive");
    ExponentSet order = canonical_B(n, n);
    PolyCoeffs out{n, n, BasisKind::linear_power, std::vector<Rational>(order.size())};
    const Integer n_fact = factorial(n);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& alpha = order[i];
        unsigned gap = n - alpha.support_size();
        Integer den = n_fact * ipow(n, gap);
        for (unsigned a : alpha.entries())
            if (a != 0)
                den *= a;
        Rational c(factorial(gap), den);
        c.canonicalize();
        out.coeffs[i] = gap % 2 == 0 ? c : Rational(-c);
    }
    return out;
}

Json to_json(const PolyCoeffs& p)
{
    ExponentSet order = canonical_B(p.n, p.d);
    if (order.size() != p.coeffs.size())
        throw std::invalid_argument("to_json: coefficient count does not match s_{n,d}");
    Json j;
    j["n"] = p.n;
    j["d"] = p.d;
    j["basis"] = to_string(p.basis);
    Json terms = Json::array();
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (sgn(p.coeffs[i]) == 0)
            continue;
        Json t;
        t["exponent"] = order[i].entries();
        t["coeff"] = to_string(p.coeffs[i]);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

PolyCoeffs poly_from_json(const Json& j)
{
    try {
        PolyCoeffs p;
        auto n = j.at("n").get<long long>();
        auto d = j.at("d").get<long long>();
        if (n < 1 || d < 1 || n > 64 || d > 64)
            throw std::invalid_argument("polynomial JSON: n and d must lie in [1, 64]");
        p.n = static_cast<unsigned>(n);
        p.d = static_cast<unsigned>(d);
        p.basis = parse_basis(j.at("basis").get<std::string>());
        ExponentSet order = canonical_B(p.n, p.d);
        std::map<Exponent, std::size_t> position;
        for (std::size_t i = 0; i < order.size(); ++i)
            position.emplace(order[i], i);
        p.coeffs.assign(order.size(), Rational(0));
        std::vector<bool> seen(order.size(), false);
        for (const auto& t : j.at("terms")) {
            Exponent e(t.at("exponent").get<std::vector<unsigned>>());
            auto it = position.find(e);
            if (it == position.end())
                throw std::invalid_argument("polynomial JSON: exponent " + to_string(e) + " is not in B(n,d)");
            if (seen[it->second])
                throw std::invalid_argument("polynomial JSON: duplicate exponent " + to_string(e));
            seen[it->second] = true;
            p.coeffs[it->second] = parse_rational(t.at("coeff").get<std::string>());
        }
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("polynomial JSON: ") + e.what());
    }
}

}  // namespace ppm
