#include "ppm/linalg.hpp"

#include <utility>

namespace ppm {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions differ");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RatMatrix multiply(const IntMatrix& a, const RatMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: inner dimensions differ");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0)
                    out(i, j) += Rational(a(i, k)) * b(k, j);
        }
    return out;
}

Integer det_bareiss(IntMatrix a)
{
    if (!a.is_square())
        throw std::invalid_argument("det_bareiss: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = k; j < n; ++j)
                swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RatMatrix solve_exact(const IntMatrix& m, const RatMatrix& rhs)
{
    if (!m.is_square())
        throw std::invalid_argument("solve_exact: matrix is not square");
    if (rhs.rows() != m.rows())
        throw std::invalid_argument("solve_exact: right-hand side has wrong length");
    const std::size_t n = m.rows();
    const std::size_t w = rhs.cols();

    // Clear denominators so elimination stays in the integers.
    Integer scale = 1;
    for (const auto& v : rhs.entries())
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());

    IntMatrix a(n, n + w);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = m(i, j);
        for (std::size_t j = 0; j < w; ++j)
            a(i, n + j) = rhs(i, j).get_num() * (scale / rhs(i, j).get_den());
    }

    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t p = k + 1;
            while (p < n && sgn(a(p, k)) == 0)
                ++p;
            if (p == n)
                throw SingularMatrixError("solve_exact: matrix is singular");
            for (std::size_t j = k; j < n + w; ++j)
                swap(a(k, j), a(p, j));
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n + w; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }

    RatMatrix x(n, w);
    for (std::size_t c = 0; c < w; ++c)
        for (std::size_t ii = n; ii-- > 0;) {
            Rational acc(a(ii, n + c));
            for (std::size_t j = ii + 1; j < n; ++j)
                if (sgn(a(ii, j)) != 0)
                    acc -= Rational(a(ii, j)) * x(j, c);
            x(ii, c) = acc / Rational(a(ii, ii));
        }
    if (scale != 1)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t c = 0; c < w; ++c)
                x(i, c) /= scale;
    return x;
}

std::vector<Rational> solve_exact(const IntMatrix& m, std::span<const Rational> rhs)
{
    RatMatrix b(rhs.size(), 1, std::vector<Rational>(rhs.begin(), rhs.end()));
    RatMatrix x = solve_exact(m, b);
    return x.entries();
}

RatMatrix inverse_exact(const IntMatrix& m)
{
    RatMatrix id = RatMatrix::identity(m.rows());
    return solve_exact(m, id);
}

BlockTriangularSolver::BlockTriangularSolver(IntMatrix m, std::vector<BlockRange> blocks, Triangle shape)
    : m_(std::move(m)), blocks_(std::move(blocks)), shape_(shape)
{
    if (!m_.is_square())
        throw std::invalid_argument("BlockTriangularSolver: matrix is not square");
    std::vector<std::size_t> block_of(m_.rows());
    std::size_t next = 0;
    for (std::size_t t = 0; t < blocks_.size(); ++t) {
        if (blocks_[t].offset != next || blocks_[t].size == 0)
            throw std::invalid_argument("BlockTriangularSolver: blocks do not tile the index range");
        for (std::size_t i = 0; i < blocks_[t].size; ++i)
            block_of[next + i] = t;
        next += blocks_[t].size;
    }
    if (next != m_.rows())
        throw std::invalid_argument("BlockTriangularSolver: blocks do not tile the index range");

    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j) {
            bool wrong_side = shape_ == Triangle::lower ? block_of[j] > block_of[i] : block_of[j] < block_of[i];
            if (wrong_side && sgn(m_(i, j)) != 0)
                throw std::invalid_argument("BlockTriangularSolver: matrix is not block " +
                                            std::string(shape_ == Triangle::lower ? "lower" : "upper") +
                                            " triangular at (" + std::to_string(i) + "," +
                                            std::to_string(j) + ")");
        }

    std::vector<IntMatrix> distinct;
    for (const auto& blk : blocks_) {
        IntMatrix diag(blk.size, blk.size);
        for (std::size_t i = 0; i < blk.size; ++i)
            for (std::size_t j = 0; j < blk.size; ++j)
                diag(i, j) = m_(blk.offset + i, blk.offset + j);
        std::size_t id = 0;
        while (id < distinct.size() && !(distinct[id] == diag))
            ++id;
        if (id == distinct.size()) {
            inverses_.push_back(inverse_exact(diag));
            distinct.push_back(std::move(diag));
        }
        inverse_of_block_.push_back(id);
    }
}

std::vector<Rational> BlockTriangularSolver::solve(std::span<const Rational> rhs) const
{
    const std::size_t s = m_.rows();
    if (rhs.size() != s)
        throw std::invalid_argument("BlockTriangularSolver::solve: right-hand side has wrong length");
    std::vector<Rational> x(s);
    std::vector<Rational> residual;
    auto solve_block = [&](std::size_t t) {
        const auto& blk = blocks_[t];
        residual.assign(rhs.begin() + blk.offset, rhs.begin() + blk.offset + blk.size);
        // Subtract the contribution of already-solved blocks.
        std::size_t lo = shape_ == Triangle::lower ? 0 : blk.offset + blk.size;
        std::size_t hi = shape_ == Triangle::lower ? blk.offset : s;
        for (std::size_t i = 0; i < blk.size; ++i) {
            auto row = m_.row(blk.offset + i);
            for (std::size_t j = lo; j < hi; ++j)
                if (sgn(row[j]) != 0 && sgn(x[j]) != 0)
                    residual[i] -= Rational(row[j]) * x[j];
        }
        const RatMatrix& inv = inverses_[inverse_of_block_[t]];
        for (std::size_t i = 0; i < blk.size; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < blk.size; ++j)
                if (sgn(inv(i, j)) != 0 && sgn(residual[j]) != 0)
                    acc += inv(i, j) * residual[j];
            x[blk.offset + i] = std::move(acc);
        }
    };
    if (shape_ == Triangle::lower)
        for (std::size_t t = 0; t < blocks_.size(); ++t)
            solve_block(t);
    else
        for (std::size_t t = blocks_.size(); t-- > 0;)
            solve_block(t);
    return x;
}

RatMatrix BlockTriangularSolver::inverse() const
{
    const std::size_t s = m_.rows();
    RatMatrix inv(s, s);
    std::vector<Rational> e(s);
    for (std::size_t c = 0; c < s; ++c) {
        e[c] = 1;
        auto col = solve(e);
        e[c] = 0;
        for (std::size_t i = 0; i < s; ++i)
            inv(i, c) = std::move(col[i]);
    }
    return inv;
}

}  // namespace ppm
