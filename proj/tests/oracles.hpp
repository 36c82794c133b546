#pragma once

// Test-only reference computations. None of these share code paths with the
// library routines they check.

#include "ppm/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using ppm::Integer;
using ppm::Rational;

/// Every vector in {0..d}^n summing to d, by exhaustive product enumeration.
inline std::vector<std::vector<unsigned>> weak_compositions(unsigned n, unsigned d)
{
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> v(n, 0);
    for (;;) {
        if (std::accumulate(v.begin(), v.end(), 0u) == d)
            out.push_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == d)
            v[i++] = 0;
        if (i == n)
            break;
        ++v[i];
    }
    return out;
}

/// Determinant by Leibniz expansion over all permutations (tiny matrices).
inline Integer leibniz_det(const std::vector<std::vector<Integer>>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        Integer term = sign;
        for (std::size_t i = 0; i < n; ++i)
            term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Cofactor expansion along the first row (small matrices, any entries).
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c)
                    row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        Integer term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

/// Sparse multivariate polynomial keyed by exponent vector.
using SparsePoly = std::map<std::vector<unsigned>, Rational>;

inline SparsePoly multiply(const SparsePoly& a, const SparsePoly& b)
{
    SparsePoly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<unsigned> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// <alpha, x>^d expanded by repeated multiplication of the linear form.
inline SparsePoly linear_form_power(const std::vector<unsigned>& alpha, unsigned d)
{
    const std::size_t n = alpha.size();
    SparsePoly form;
    for (std::size_t i = 0; i < n; ++i)
        if (alpha[i] != 0) {
            std::vector<unsigned> e(n, 0);
            e[i] = 1;
            form[e] = alpha[i];
        }
    SparsePoly acc{{std::vector<unsigned>(n, 0), Rational(1)}};
    for (unsigned k = 0; k < d; ++k)
        acc = multiply(acc, form);
    return acc;
}

}  // namespace oracle
