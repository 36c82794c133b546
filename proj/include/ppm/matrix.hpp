#pragma once

// Dense row-major exact matrix, optionally carrying the exponent set that
// indexes its rows and columns.

#include "ppm/compositions.hpp"
#include "ppm/integer.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace ppm {

template <typename T>
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("ExactMatrix: entry count does not match dimensions");
    }

    static ExactMatrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        ExactMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = rows[i][j];
        }
        return m;
    }

    static ExactMatrix identity(std::size_t size)
    {
        ExactMatrix m(size, size);
        for (std::size_t i = 0; i < size; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<T> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
    std::span<const T> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    const std::vector<T>& entries() const { return entries_; }

    /// Exponent set indexing rows and columns, when the matrix has one.
    const std::optional<ExponentSet>& index() const { return index_; }
    void set_index(std::optional<ExponentSet> index) { index_ = std::move(index); }

    ExactMatrix transposed() const
    {
        ExactMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        t.index_ = index_;
        return t;
    }

    /// Symmetric permutation: result(i,j) = this(perm[i], perm[j]).
    ExactMatrix permuted(std::span<const std::size_t> perm) const
    {
        if (!is_square() || perm.size() != rows_)
            throw std::invalid_argument("permuted: permutation size mismatch");
        ExactMatrix p(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                p(i, j) = (*this)(perm[i], perm[j]);
        if (index_) {
            ExponentSet reordered{index_->n, index_->d, {}, Order::input};
            for (std::size_t i : perm)
                reordered.members.push_back(index_->members[i]);
            p.index_ = std::move(reordered);
        }
        return p;
    }

    /// Entry equality; the index is metadata and is not compared.
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
    std::optional<ExponentSet> index_;
};

using IntMatrix = ExactMatrix<Integer>;
using RatMatrix = ExactMatrix<Rational>;

/// Number of nonzero entries.
template <typename T>
std::size_t nnz_count(const ExactMatrix<T>& m)
{
    std::size_t count = 0;
    for (const auto& v : m.entries())
        if (v != 0)
            ++count;
    return count;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const IntMatrix& a, const RatMatrix& b);

}  // namespace ppm
