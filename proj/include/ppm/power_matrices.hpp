#pragma once

// The power-product operator and the matrices built from it: V(n,d), its
// multinomial-scaled companion V̂(n,d), and the (k+1)x(k+1) matrix A_k(a,b).

#include "ppm/compositions.hpp"
#include "ppm/matrix.hpp"

namespace ppm {

/// prod_k base_k^exponent_k with 0^0 = 1. Lengths must match.
Integer power_product(const Exponent& base, const Exponent& exponent);

/// (A ⊛ B)(i,j) = prod_k A(i,k)^B(k,j), 0^0 = 1. Throws on an inner
/// dimension mismatch or a negative exponent entry.
IntMatrix power_product(const IntMatrix& a, const IntMatrix& b);

/// Square matrix [(x^i)^(x^j)] over an arbitrary exponent family (no
/// completeness check). Used for V(n,d) and for the k-composition blocks.
IntMatrix power_product_matrix(const ExponentSet& set);

/// V(n,d) in the order given; `order` must enumerate B(n,d).
IntMatrix build_V(const ExponentSet& order);
/// V(n,d) in lex order.
IntMatrix build_V(unsigned n, unsigned d);

/// V̂(n,d) built entry by entry: multinomial(d, x^j) * (x^i)^(x^j).
IntMatrix build_Vhat(const ExponentSet& order);

/// V · diag(multinomial(d, x^j)); `v` must carry its index.
IntMatrix scale_by_multinomials(const IntMatrix& v);

/// A_k(a,b)(i,j) = (a-i+1)^(k-j+1) * (b+i-1)^(j-1), 1-indexed, (k+1)x(k+1).
IntMatrix build_A(unsigned k, const Integer& a, const Integer& b);

}  // namespace ppm
