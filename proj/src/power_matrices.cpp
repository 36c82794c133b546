#include "ppm/power_matrices.hpp"

#include <cstdint>
#include <stdexcept>

namespace ppm {

namespace {

// Entries of a power-product matrix over exponents of degree d are bounded by
// d^d, which fits in 63 bits up to d = 15.
constexpr unsigned kMaxMachineDegree = 15;

std::uint64_t power_product_u64(const Exponent& base, const Exponent& exponent)
{
    std::uint64_t r = 1;
    for (std::size_t k = 0; k < base.size(); ++k)
        for (unsigned e = 0; e < exponent[k]; ++e)
            r *= base[k];
    return r;
}

void require_full(const ExponentSet& order)
{
    if (!is_full_enumeration(order))
        throw std::invalid_argument("order is not a full enumeration of B(" + std::to_string(order.n) +
                                    "," + std::to_string(order.d) + ")");
}

}  // namespace

Integer power_product(const Exponent& base, const Exponent& exponent)
{
    if (base.size() != exponent.size())
        throw std::invalid_argument("power_product: length mismatch");
    Integer r = 1;
    for (std::size_t k = 0; k < base.size(); ++k) {
        if (exponent[k] == 0)
            continue;
        if (base[k] == 0)
            return 0;
        r *= ipow(base[k], exponent[k]);
    }
    return r;
}

IntMatrix power_product(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("power_product: inner dimensions differ");
    for (const auto& e : b.entries()) {
        if (e < 0)
            throw std::invalid_argument("power_product: negative exponent entry");
        if (!e.fits_ulong_p())
            throw std::invalid_argument("power_product: exponent entry too large");
    }
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Integer r = 1;
            for (std::size_t k = 0; k < a.cols() && r != 0; ++k)
                r *= ipow(a(i, k), b(k, j).get_ui());
            out(i, j) = std::move(r);
        }
    return out;
}

IntMatrix power_product_matrix(const ExponentSet& set)
{
    const std::size_t s = set.size();
    IntMatrix m(s, s);
    const bool masks = set.n <= 64;
    std::vector<unsigned long long> support(s);
    if (masks)
        for (std::size_t i = 0; i < s; ++i)
            support[i] = set[i].support_mask();
    const bool machine = set.d <= kMaxMachineDegree;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) {
            // zero iff supp(x^j) is not contained in supp(x^i)
            if (masks && (support[j] & ~support[i]) != 0)
                continue;
            if (machine)
                mpz_set_ui(m(i, j).get_mpz_t(), power_product_u64(set[i], set[j]));
            else
                m(i, j) = power_product(set[i], set[j]);
        }
    m.set_index(set);
    return m;
}

IntMatrix build_V(const ExponentSet& order)
{
    require_full(order);
    return power_product_matrix(order);
}

IntMatrix build_V(unsigned n, unsigned d)
{
    return power_product_matrix(enumerate_B(n, d));
}

IntMatrix build_Vhat(const ExponentSet& order)
{
    require_full(order);
    const std::size_t s = order.size();
    IntMatrix m(s, s);
    for (std::size_t j = 0; j < s; ++j) {
        Integer weight = multinomial(order.d, order[j]);
        for (std::size_t i = 0; i < s; ++i)
            m(i, j) = weight * power_product(order[i], order[j]);
    }
    m.set_index(order);
    return m;
}

IntMatrix scale_by_multinomials(const IntMatrix& v)
{
    if (!v.index())
        throw std::invalid_argument("scale_by_multinomials: matrix carries no exponent index");
    const auto& order = *v.index();
    if (order.size() != v.cols())
        throw std::invalid_argument("scale_by_multinomials: index size does not match columns");
    IntMatrix out = v;
    for (std::size_t j = 0; j < v.cols(); ++j) {
        Integer weight = multinomial(order.d, order[j]);
        for (std::size_t i = 0; i < v.rows(); ++i)
            out(i, j) *= weight;
    }
    return out;
}

IntMatrix build_A(unsigned k, const Integer& a, const Integer& b)
{
    IntMatrix m(k + 1, k + 1);
    for (unsigned i = 1; i <= k + 1; ++i)
        for (unsigned j = 1; j <= k + 1; ++j)
            m(i - 1, j - 1) = ipow(a - i + 1, k - j + 1) * ipow(b + i - 1, j - 1);
    return m;
}

}  // namespace ppm
