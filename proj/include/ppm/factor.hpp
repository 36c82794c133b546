#pragma once

// Integer factorization for determinant values: trial division, then
// Pollard-Brent rho on whatever survives, with a hard work budget.

#include "ppm/integer.hpp"

#include <map>
#include <string>

namespace ppm {

struct FactoredInteger {
    int sign = 1;
    std::map<Integer, unsigned long> factors;  ///< prime -> exponent >= 1
    /// False if the work budget ran out; `cofactor` then holds the
    /// composite part that could not be split.
    bool complete = true;
    Integer cofactor = 1;

    /// sign · ∏ p^e · cofactor.
    Integer value() const;
    Integer largest_prime() const;

    /// "2^6 * 3^2", "1" for the unit, with a trailing "* [c]" for an
    /// unsplit cofactor and a leading "-" for negative values.
    std::string to_string() const;

    void multiply_by(const FactoredInteger& other, unsigned long power = 1);

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;
};

struct FactorLimits {
    unsigned long trial_bound = 100000;
    unsigned long rho_iterations = 2000000;  ///< total across all splits
};

/// Complete factorization of v != 0 unless the budget is exhausted.
/// Throws std::invalid_argument for v == 0.
FactoredInteger factorize(const Integer& v, const FactorLimits& limits = {});

bool is_probable_prime(const Integer& v);

}  // namespace ppm
