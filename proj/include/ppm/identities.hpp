#pragma once

// Brute-force oracles for the combinatorial identities behind the
// nonsingularity of V(n,d): a generating-function identity over compositions,
// a rearrangement of the alternating composition sum, its reading as a signed
// count of couples (S, θ), the sign-reversing involution on those couples,
// and the resulting δ_{nr} identity. Everything is evaluated exactly.

#include "ppm/integer.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppm {

/// c(m,k) from c(m,k) = c(m-1,k-1) + (m-1)·c(m-1,k), c(0,0) = 1.
Integer signless_stirling(unsigned m, unsigned k);

struct IdentityCheck {
    bool holds = false;
    Rational lhs;
    Rational rhs;
};

/// Σ_{k=0}^m Σ_{a ⊨ m, k parts} (-n)^k / (k! a_1...a_k) = (-1)^m C(n,m).
/// Requires n > m.
IdentityCheck verify_gf_identity(unsigned m, unsigned n);

/// Rearrangement of the weighted composition sum; b has r = |b| positive
/// parts with 1 <= r <= n.
IdentityCheck verify_rearrangement(unsigned n, const std::vector<unsigned>& b);

/// multinomial(n; b) · (weighted composition sum) = δ_{n,r}; requires
/// b_1 + ... + b_r = n.
IdentityCheck verify_delta_identity(unsigned n, const std::vector<unsigned>& b);

/// A couple (S, θ): S ⊆ {1..n} nonempty, θ ∈ S^n. 1-based values.
struct Couple {
    std::vector<unsigned> subset;  ///< sorted ascending
    std::vector<unsigned> theta;

    int weight() const { return subset.size() % 2 == 0 ? 1 : -1; }

    friend bool operator==(const Couple&, const Couple&) = default;
    friend auto operator<=>(const Couple&, const Couple&) = default;
};

std::string to_string(const Couple& c);

/// Membership in C for the given n and b (|b| = n).
bool is_couple(const Couple& c, unsigned n, const std::vector<unsigned>& b);

/// All couples, ordered by subset then θ. Requires n > r >= 1 and |b| = n.
std::vector<Couple> enumerate_couples(unsigned n, const std::vector<unsigned>& b);

/// Σ wt over the couples.
Integer couple_weight_sum(const std::vector<Couple>& couples);

/// Σ_{s=r}^n (-1)^s C(n,s) Σ_{a ⊨ s, r parts} a_1^(b_1-1)...a_r^(b_r-1).
Integer alternating_composition_sum(unsigned n, const std::vector<unsigned>& b);

/// Σ_{a ⊨ s, r parts} ∏ a_i^(b_i-1): the number of couples with |S| = s
/// for any fixed S.
Integer couples_per_subset(unsigned s, const std::vector<unsigned>& b);

/// The involution's case analysis does not apply to a couple.
class InvolutionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The sign-reversing map φ, taken literally from its case split. Throws
/// InvolutionError where a case's stated premise does not hold.
Couple involution(const Couple& c, unsigned n);

struct InvolutionFailure {
    Couple couple;
    std::optional<Couple> image;
    std::string reason;
};

struct InvolutionReport {
    unsigned n = 0;
    std::vector<unsigned> b;
    std::size_t couples = 0;
    std::size_t failures = 0;
    std::optional<InvolutionFailure> first_failure;

    bool holds() const { return failures == 0 && couples % 2 == 0; }
};

/// Checks φ(x) ∈ C, φ(φ(x)) = x and wt(φ(x)) = -wt(x) for every couple.
InvolutionReport involution_check(unsigned n, const std::vector<unsigned>& b);

/// Outcome of an exhaustive parameter sweep.
struct SuiteResult {
    std::string name;
    std::string range;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<std::string> first_counterexample;

    bool passed() const { return failures == 0; }
};

SuiteResult run_gf_suite(unsigned m_max, unsigned n_max);
SuiteResult run_rearrangement_suite(unsigned n_max);
SuiteResult run_delta_suite(unsigned n_max);
/// Couple weighted sums against the alternating sum, zero for n > r, and
/// per-subset couple counts.
SuiteResult run_couples_suite(unsigned n_max);
SuiteResult run_involution_suite(unsigned n_max);

/// All compositions b of n (any number of parts), lex-descending by length.
std::vector<std::vector<unsigned>> all_compositions(unsigned n);

std::string to_string(const std::vector<unsigned>& v);

}  // namespace ppm
