#pragma once

// Exact linear algebra over the integers: fraction-free determinants and
// solves, and a block-triangular solver that only ever factors the small
// diagonal blocks.

#include "ppm/matrix.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace ppm {

class SingularMatrixError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
/// The empty matrix has determinant 1.
Integer det_bareiss(IntMatrix m);

/// Solves m·x = rhs exactly. Throws SingularMatrixError if m is singular.
std::vector<Rational> solve_exact(const IntMatrix& m, std::span<const Rational> rhs);

/// Solves m·X = rhs column by column with a single elimination.
RatMatrix solve_exact(const IntMatrix& m, const RatMatrix& rhs);

RatMatrix inverse_exact(const IntMatrix& m);

struct BlockRange {
    std::size_t offset = 0;
    std::size_t size = 0;
};

enum class Triangle { lower, upper };

/// Solver for a square matrix that is block triangular with respect to a
/// tiling of its index range into consecutive diagonal blocks. Each distinct
/// diagonal block is inverted once; identical blocks share the inverse.
class BlockTriangularSolver {
public:
    /// Throws std::invalid_argument if `blocks` does not tile the index range
    /// or if an entry on the wrong side of the block diagonal is nonzero;
    /// throws SingularMatrixError if a diagonal block is singular.
    BlockTriangularSolver(IntMatrix m, std::vector<BlockRange> blocks, Triangle shape);

    std::vector<Rational> solve(std::span<const Rational> rhs) const;
    RatMatrix inverse() const;

    std::size_t size() const { return m_.rows(); }
    /// Number of distinct diagonal blocks that had to be inverted.
    std::size_t distinct_blocks() const { return inverses_.size(); }

private:
    IntMatrix m_;
    std::vector<BlockRange> blocks_;
    Triangle shape_;
    std::vector<std::size_t> inverse_of_block_;
    std::vector<RatMatrix> inverses_;
};

}  // namespace ppm
