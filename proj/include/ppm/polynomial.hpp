#pragma once

// Univariate polynomials in n with exact rational coefficients; the exponent
// polynomials f_p(n) of determinant factorizations live here.

#include "ppm/integer.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ppm {

class RationalPolynomial {
public:
    RationalPolynomial() = default;
    /// Coefficients from the constant term upward; trailing zeros trimmed.
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    static RationalPolynomial constant(const Rational& c);
    /// The polynomial n.
    static RationalPolynomial variable();
    /// C(n, i) = n(n-1)...(n-i+1) / i! as a polynomial in n.
    static RationalPolynomial binomial_in_n(unsigned i);
    /// Unique polynomial of degree < points.size() through every (x, y).
    /// Throws std::invalid_argument on repeated abscissae.
    static RationalPolynomial interpolate(std::span<const std::pair<Rational, Rational>> points);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    Rational coefficient(std::size_t power) const;

    Rational evaluate(const Rational& x) const;

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator-=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const RationalPolynomial& other);
    RationalPolynomial& operator*=(const Rational& scalar);

    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
    friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b)
    {
        return a.coefficients_ == b.coefficients_;
    }

    /// Canonical text over a common positive denominator, highest power
    /// first, e.g. "(n^4 + 2*n^3 + 11*n^2 - 14*n)/6" or "3*n".
    std::string to_string(const std::string& var = "n") const;

private:
    void trim();
    std::vector<Rational> coefficients_;
};

}  // namespace ppm
