#pragma once

// Homogeneous degree-d polynomials in n variables, expressed either in the
// monomial basis {x^a} or in the basis of linear-form powers {<a,x>^d},
// a ranging over B(n,d). The two are related by
//   [<a^i,x>^d]_i = V̂(n,d) · [x^(a^j)]_j,
// so monomial coefficients c and linear-power coefficients y satisfy
// c = V̂ᵀ y. Coefficient vectors are indexed by the canonical-block order.

#include "ppm/compositions.hpp"
#include "ppm/linalg.hpp"
#include "ppm/matrix_io.hpp"

#include <map>
#include <string>
#include <vector>

namespace ppm {

enum class BasisKind { monomial, linear_power };

std::string to_string(BasisKind kind);
BasisKind parse_basis(const std::string& text);

struct PolyCoeffs {
    unsigned n = 0;
    unsigned d = 0;
    BasisKind basis = BasisKind::monomial;
    std::vector<Rational> coeffs;

    friend bool operator==(const PolyCoeffs&, const PolyCoeffs&) = default;
};

class BasisConverter {
public:
    BasisConverter(unsigned n, unsigned d);

    unsigned n() const { return order_.n; }
    unsigned d() const { return order_.d; }
    const ExponentSet& order() const { return order_; }
    /// Throws std::out_of_range if alpha is not in B(n,d).
    std::size_t index_of(const Exponent& alpha) const;
    /// V̂(n,d) in canonical-block order.
    const IntMatrix& vhat() const { return vhat_; }

    PolyCoeffs zero(BasisKind basis) const;

    /// Solves V̂ᵀ y = c. Throws std::invalid_argument on a basis or shape
    /// mismatch.
    PolyCoeffs to_linear_power(const PolyCoeffs& monomial) const;
    /// c = V̂ᵀ y.
    PolyCoeffs from_linear_power(const PolyCoeffs& linear_power) const;

private:
    void check_shape(const PolyCoeffs& p, BasisKind expected) const;

    ExponentSet order_;
    std::map<Exponent, std::size_t> position_;
    IntMatrix vhat_;
    BlockTriangularSolver transposed_solver_;
};

/// Monomial coefficients of <alpha,x>^d: multinomial(d,b)·alpha^b on x^b.
PolyCoeffs monomial_expansion_of_power(const Exponent& alpha);

/// Linear-power coefficients of x_1 x_2 ... x_n in degree n:
/// (-1)^(n-k) (n-k)! / (n! n^(n-k) ∏_{a_i != 0} a_i) with k = ||a||_0.
PolyCoeffs product_monomial_coeffs(unsigned n);

/// {"n", "d", "basis", "terms": [{"exponent": [..], "coeff": "p/q"}]};
/// zero coefficients are omitted, terms follow canonical order.
Json to_json(const PolyCoeffs& p);
/// Unlisted exponents are zero. Throws std::invalid_argument on exponents
/// outside B(n,d), duplicates, or malformed coefficients.
PolyCoeffs poly_from_json(const Json& j);

}  // namespace ppm
