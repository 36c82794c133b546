#pragma once

// Determinants of power-product matrices: the block-product route, the
// full-matrix oracle, closed forms for A_k(a,b) and V(2,d), and the
// exponent-polynomial explorer for the prime factorization of det V(n,d).

#include "ppm/factor.hpp"
#include "ppm/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ppm {

/// A diagonal block of V(n,d) turned out singular.
class NonsingularityViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BlockDeterminant {
    unsigned k = 0;
    Integer det;
    FactoredInteger factored;
};

/// det of the k-composition block for k = 1..d; these do not depend on n.
/// Throws NonsingularityViolation on a zero block determinant.
std::vector<BlockDeterminant> composition_block_determinants(unsigned d);

struct DetV {
    unsigned n = 0;
    unsigned d = 0;
    Integer value;
    FactoredInteger factored;
    std::vector<BlockDeterminant> blocks;  ///< k = 1..min(n,d)
};

/// det V(n,d) = ∏_k det(block_k)^C(n,k).
DetV det_V_blocks(unsigned n, unsigned d);
FactoredInteger det_V(unsigned n, unsigned d);

/// det_bareiss of the whole V(n,d) in lex order.
Integer det_V_full(unsigned n, unsigned d);
/// det_bareiss of V(n,d) symmetrically permuted into canonical-block order.
Integer det_V_permuted(unsigned n, unsigned d);

/// (a+b)^(k(k+1)/2) · ∏_{h=1}^k h!.
Integer det_A_closed(unsigned k, const Integer& a, const Integer& b);

/// d^(d(d+1)/2) · ∏_{h=1}^d h!.
Integer det_V2_closed(unsigned d);

std::vector<unsigned long> primes_up_to(unsigned long bound);

struct ExponentPolynomial {
    Integer prime;
    RationalPolynomial poly;
};

struct PrimeSupportCheck {
    unsigned n = 0;
    unsigned d = 0;
    FactoredInteger det;           ///< direct factorization of the value
    bool within_small_primes = true;  ///< every prime factor is <= d
    std::vector<Integer> outside;  ///< prime factors > d, if any
};

/// Factors det V(n,d) directly and checks its primes against P(d).
PrimeSupportCheck check_prime_support(unsigned n, unsigned d);

struct ConjectureReport {
    unsigned d = 0;
    unsigned n_max = 0;
    std::vector<PrimeSupportCheck> per_n;  ///< n = 1..n_max
    /// f_p(n) = Σ_i C(n,i)·v_p(det block_i), one per prime of P(d) and per
    /// any prime found in a block determinant.
    std::vector<ExponentPolynomial> valuation_polynomials;
    /// Same primes, fitted through n = 1..d from the factored determinants.
    std::vector<ExponentPolynomial> interpolated_polynomials;
    bool routes_agree = false;
    /// Valuation polynomials evaluated at n = d+1, d+2 match the directly
    /// factored determinants.
    bool cross_check_passed = false;
    bool counterexample_found = false;
    bool factorizations_complete = true;

    bool verified() const
    {
        return routes_agree && cross_check_passed && !counterexample_found && factorizations_complete;
    }
};

/// Requires d >= 2 and n_max >= d + 2; throws std::invalid_argument otherwise.
ConjectureReport conjecture_explore(unsigned d, unsigned n_max);

}  // namespace ppm
