#include "ppm/structure.hpp"

#include "ppm/power_matrices.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ppm {

std::strong_ordering lrlex_compare(const Exponent& a, const Exponent& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("lrlex_compare: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool in_a = a[i] != 0;
        bool in_b = b[i] != 0;
        if (in_a != in_b)
            return in_a ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] != b[j])
            return a[j] > b[j] ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ExponentSet canonical_block_order(const ExponentSet& set)
{
    ExponentSet out = set;
    std::stable_sort(out.members.begin(), out.members.end(), [](const Exponent& x, const Exponent& y) {
        unsigned kx = x.support_size();
        unsigned ky = y.support_size();
        if (kx != ky)
            return kx < ky;
        return lrlex_compare(x, y) == std::strong_ordering::less;
    });
    out.order = Order::canonical_block;
    return out;
}

std::vector<BlockRange> BlockDecomposition::diagonal_blocks() const
{
    std::vector<BlockRange> blocks;
    std::size_t offset = 0;
    for (const auto& g : groups)
        for (std::size_t t = 0; t < g.multiplicity; ++t) {
            blocks.push_back({offset, g.block.rows()});
            offset += g.block.rows();
        }
    return blocks;
}

IntMatrix composition_block(unsigned d, unsigned k)
{
    return power_product_matrix(enumerate_k_compositions(d, k));
}

BlockDecomposition block_decompose(unsigned n, unsigned d)
{
    ExponentSet lex = enumerate_B(n, d);
    BlockDecomposition dec;
    dec.n = n;
    dec.d = d;
    dec.p = std::min(n, d);
    dec.order = canonical_block_order(lex);

    std::map<Exponent, std::size_t> lex_position;
    for (std::size_t i = 0; i < lex.size(); ++i)
        lex_position.emplace(lex[i], i);
    for (const auto& e : dec.order.members)
        dec.permutation.push_back(lex_position.at(e));

    for (unsigned k = 1; k <= dec.p; ++k)
        dec.groups.push_back({k, binomial(n, k).get_ui(), composition_block(d, k)});

    const auto blocks = dec.diagonal_blocks();
    const std::size_t s = dec.order.size();
    if (blocks.empty() || blocks.back().offset + blocks.back().size != s)
        throw StructureError("block sizes do not sum to s_{n,d}");

    // Each diagonal sub-block must hold exactly one support pattern, and no
    // pattern may reappear in a later sub-block.
    std::vector<std::size_t> block_of(s);
    std::vector<unsigned long long> seen_patterns;
    for (std::size_t t = 0; t < blocks.size(); ++t) {
        auto mask = dec.order[blocks[t].offset].support_mask();
        if (std::find(seen_patterns.begin(), seen_patterns.end(), mask) != seen_patterns.end())
            throw StructureError("support pattern is not contiguous in the canonical order");
        seen_patterns.push_back(mask);
        for (std::size_t i = 0; i < blocks[t].size; ++i) {
            std::size_t pos = blocks[t].offset + i;
            if (dec.order[pos].support_mask() != mask)
                throw StructureError("diagonal block mixes support patterns at position " + std::to_string(pos));
            block_of[pos] = t;
        }
    }

    IntMatrix v = power_product_matrix(dec.order);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (block_of[j] > block_of[i] && sgn(v(i, j)) != 0)
                throw StructureError("nonzero above the block diagonal at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")");

    std::size_t t = 0;
    for (const auto& g : dec.groups)
        for (std::size_t copy = 0; copy < g.multiplicity; ++copy, ++t) {
            const auto& blk = blocks[t];
            for (std::size_t i = 0; i < blk.size; ++i)
                for (std::size_t j = 0; j < blk.size; ++j)
                    if (v(blk.offset + i, blk.offset + j) != g.block(i, j))
                        throw StructureError("diagonal block " + std::to_string(t) + " of group k=" +
                                             std::to_string(g.k) + " differs from the composition block");
        }
    return dec;
}

Integer nnz_formula(unsigned n, unsigned d)
{
    Integer total = 0;
    for (unsigned k = 1; k <= std::min(n, d); ++k)
        total += binomial(n, k) * binomial(d - 1, k - 1) * binomial(d + k - 1, d);
    return total;
}

Rational sparsity(unsigned n, unsigned d)
{
    Integer s = count_weak_compositions(n, d);
    Rational r = 1 - Rational(nnz_formula(n, d), s * s);
    r.canonicalize();
    return r;
}

InversePatternReport inverse_pattern_check(unsigned n, unsigned d, std::size_t size_cap)
{
    Integer s = count_weak_compositions(n, d);
    if (s > size_cap)
        throw SizeLimitError("inverse_pattern_check: s_{n,d} = " + to_string(s) + " exceeds the size cap " +
                             std::to_string(size_cap));
    BlockDecomposition dec = block_decompose(n, d);
    IntMatrix v = power_product_matrix(dec.order);
    BlockTriangularSolver solver(v, dec.diagonal_blocks(), Triangle::lower);
    RatMatrix inv = solver.inverse();

    InversePatternReport report;
    report.side = v.rows();
    report.nnz_v = nnz_count(v);
    report.nnz_inverse = nnz_count(inv);
    for (std::size_t i = 0; i < v.rows() && report.holds; ++i)
        for (std::size_t j = 0; j < v.cols(); ++j)
            if (sgn(v(i, j)) == 0 && sgn(inv(i, j)) != 0) {
                report.holds = false;
                report.counterexample = std::make_pair(i, j);
                break;
            }
    return report;
}

std::vector<SparsityRow> sparsity_table(std::pair<unsigned, unsigned> n_range, std::pair<unsigned, unsigned> d_range)
{
    if (n_range.first == 0 || d_range.first == 0 || n_range.first > n_range.second || d_range.first > d_range.second)
        throw std::invalid_argument("sparsity_table: ranges must be nonempty and positive");
    std::vector<SparsityRow> rows;
    for (unsigned n = n_range.first; n <= n_range.second; ++n)
        for (unsigned d = d_range.first; d <= d_range.second; ++d)
            rows.push_back({n, d, nnz_formula(n, d), count_weak_compositions(n, d), sparsity(n, d)});
    return rows;
}

std::string sparsity_csv(const std::vector<SparsityRow>& rows)
{
    std::string out = "n,d,nnz,s,sparsity,fraction\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.d) + "," + to_string(r.nnz) + "," +
               to_string(r.side) + "," + to_decimal(r.sparsity, 6) + "," + to_string(r.sparsity) + "\n";
    }
    return out;
}

}  // namespace ppm
