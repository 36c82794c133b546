#include "ppm/polynomial.hpp"

#include <stdexcept>

namespace ppm {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients))
{
    for (auto& c : coefficients_)
        c.canonicalize();
    trim();
}

void RationalPolynomial::trim()
{
    while (!coefficients_.empty() && sgn(coefficients_.back()) == 0)
        coefficients_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c)
{
    return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::variable()
{
    return RationalPolynomial({Rational(0), Rational(1)});
}

RationalPolynomial RationalPolynomial::binomial_in_n(unsigned i)
{
    RationalPolynomial p = constant(1);
    for (unsigned j = 0; j < i; ++j)
        p *= RationalPolynomial({Rational(-static_cast<long>(j)), Rational(1)});
    p *= Rational(1, factorial(i));
    return p;
}

RationalPolynomial RationalPolynomial::interpolate(std::span<const std::pair<Rational, Rational>> points)
{
    // Lagrange form, accumulated exactly.
    RationalPolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial term = constant(points[i].second);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i)
                continue;
            Rational gap = points[i].first - points[j].first;
            if (sgn(gap) == 0)
                throw std::invalid_argument("interpolate: repeated abscissa");
            term *= RationalPolynomial({Rational(-points[j].first), Rational(1)});
            term *= Rational(1) / gap;
        }
        result += term;
    }
    return result;
}

Rational RationalPolynomial::coefficient(std::size_t power) const
{
    return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational RationalPolynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (std::size_t i = coefficients_.size(); i-- > 0;)
        acc = acc * x + coefficients_[i];
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other)
{
    if (other.coefficients_.size() > coefficients_.size())
        coefficients_.resize(other.coefficients_.size());
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i] += other.coefficients_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other)
{
    if (other.coefficients_.size() > coefficients_.size())
        coefficients_.resize(other.coefficients_.size());
    for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
        coefficients_[i] -= other.coefficients_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& other)
{
    if (coefficients_.empty() || other.coefficients_.empty()) {
        coefficients_.clear();
        return *this;
    }
    std::vector<Rational> product(coefficients_.size() + other.coefficients_.size() - 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            product[i + j] += coefficients_[i] * other.coefficients_[j];
    coefficients_ = std::move(product);
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& scalar)
{
    for (auto& c : coefficients_)
        c *= scalar;
    trim();
    return *this;
}

std::string RationalPolynomial::to_string(const std::string& var) const
{
    if (coefficients_.empty())
        return "0";
    Integer den = 1;
    for (const auto& c : coefficients_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());

    std::string body;
    std::size_t terms = 0;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        Integer c = coefficients_[i].get_num() * (den / coefficients_[i].get_den());
        if (c == 0)
            continue;
        bool negative = c < 0;
        Integer mag = abs(c);
        if (terms == 0)
            body += negative ? "-" : "";
        else
            body += negative ? " - " : " + ";
        std::string monomial = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
        if (monomial.empty())
            body += mag.get_str();
        else if (mag == 1)
            body += monomial;
        else
            body += mag.get_str() + "*" + monomial;
        ++terms;
    }
    if (den == 1)
        return body;
    if (terms > 1)
        body = "(" + body + ")";
    return body + "/" + den.get_str();
}

}  // namespace ppm
