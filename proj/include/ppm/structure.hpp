#pragma once

// Ordering and sparsity structure of V(n,d): the logically reverse
// lexicographical order, the block lower-triangular decomposition it induces,
// and nonzero counts of V and of its inverse.

#include "ppm/compositions.hpp"
#include "ppm/linalg.hpp"
#include "ppm/matrix.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace ppm {

/// Logically reverse lexicographical comparison. Exponents with different
/// support patterns compare at the first coordinate where the patterns
/// differ, the one that is nonzero there being smaller. Exponents with the
/// same pattern compare at the first differing coordinate, the larger value
/// being smaller. Throws std::invalid_argument on a length mismatch.
std::strong_ordering lrlex_compare(const Exponent& a, const Exponent& b);

/// Groups by support size ascending and sorts each group by lrlex.
ExponentSet canonical_block_order(const ExponentSet& set);

struct BlockGroup {
    unsigned k = 0;                 ///< support size of the group
    std::size_t multiplicity = 0;   ///< C(n,k) identical diagonal blocks
    IntMatrix block;                ///< power-product matrix of the k-compositions of d
};

struct BlockDecomposition {
    unsigned n = 0;
    unsigned d = 0;
    unsigned p = 0;  ///< min(n,d)
    /// permutation[i] is the lex-order position of the i-th canonical member.
    std::vector<std::size_t> permutation;
    ExponentSet order;  ///< canonical-block order
    std::vector<BlockGroup> groups;

    /// Diagonal blocks of the permuted matrix, in order.
    std::vector<BlockRange> diagonal_blocks() const;
};

/// Thrown when the canonical order fails to expose the expected structure.
class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decomposes V(n,d). Builds the permuted V and checks that it is block lower
/// triangular with each group's diagonal sub-blocks all equal to the
/// k-composition block; throws StructureError otherwise.
BlockDecomposition block_decompose(unsigned n, unsigned d);

/// Power-product matrix of the k-compositions of d (the diagonal block of
/// group k), without building V.
IntMatrix composition_block(unsigned d, unsigned k);

/// Closed-form nonzero count of V(n,d).
Integer nnz_formula(unsigned n, unsigned d);

/// 1 - nnz(V(n,d)) / s_{n,d}^2.
Rational sparsity(unsigned n, unsigned d);

struct InversePatternReport {
    bool holds = true;
    std::size_t side = 0;
    std::size_t nnz_v = 0;
    std::size_t nnz_inverse = 0;
    /// First position (canonical order) where V is zero and V^{-1} is not.
    std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inverts V(n,d) exactly and checks supp(V^{-1}) ⊆ supp(V). Throws
/// SizeLimitError if s_{n,d} exceeds `size_cap`.
InversePatternReport inverse_pattern_check(unsigned n, unsigned d, std::size_t size_cap = 500);

struct SparsityRow {
    unsigned n = 0;
    unsigned d = 0;
    Integer nnz;
    Integer side;  ///< s_{n,d}
    Rational sparsity;
};

/// Every (n,d) of the two inclusive ranges, n-major.
std::vector<SparsityRow> sparsity_table(std::pair<unsigned, unsigned> n_range,
                                        std::pair<unsigned, unsigned> d_range);

/// Header "n,d,nnz,s,sparsity,fraction"; sparsity with 6 decimal places,
/// fraction as "p/q".
std::string sparsity_csv(const std::vector<SparsityRow>& rows);

}  // namespace ppm
