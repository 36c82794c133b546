#include "ppm/compositions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ppm {

unsigned Exponent::degree() const
{
    return std::accumulate(entries_.begin(), entries_.end(), 0u);
}

unsigned Exponent::support_size() const
{
    return static_cast<unsigned>(std::count_if(entries_.begin(), entries_.end(),
                                               [](unsigned v) { return v != 0; }));
}

unsigned long long Exponent::support_mask() const
{
    if (entries_.size() > 64)
        throw std::length_error("support_mask: exponent longer than 64");
    unsigned long long mask = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0)
            mask |= 1ULL << i;
    return mask;
}

std::string to_string(const Exponent& e)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(e[i]);
    }
    return s + ")";
}

std::string to_string(Order order)
{
    switch (order) {
    case Order::input: return "input";
    case Order::lex: return "lex";
    case Order::canonical_block: return "canonical-block";
    }
    return "input";
}

Order parse_order(const std::string& text)
{
    if (text == "input")
        return Order::input;
    if (text == "lex")
        return Order::lex;
    if (text == "canonical-block")
        return Order::canonical_block;
    throw std::invalid_argument("unknown order '" + text + "'");
}

Integer count_weak_compositions(unsigned n, unsigned d)
{
    if (n == 0 || d == 0)
        throw std::invalid_argument("count_weak_compositions: n and d must be positive");
    return binomial(static_cast<long>(d) + n - 1, d);
}

ExponentSet enumerate_B(unsigned n, unsigned d)
{
    if (n == 0 || d == 0)
        throw std::invalid_argument("enumerate_B: n and d must be positive");
    ExponentSet out{n, d, {}, Order::lex};
    out.members.reserve(count_weak_compositions(n, d).get_ui());
    std::vector<unsigned> alpha(n, 0);
    alpha[0] = d;
    for (;;) {
        out.members.emplace_back(alpha);
        int j = static_cast<int>(n) - 2;
        while (j >= 0 && alpha[j] == 0)
            --j;
        if (j < 0)
            break;
        unsigned tail = alpha[n - 1];
        alpha[n - 1] = 0;
        --alpha[j];
        alpha[j + 1] = tail + 1;
    }
    return out;
}

ExponentSet enumerate_k_compositions(unsigned d, unsigned k)
{
    if (k < 1 || k > d)
        throw std::invalid_argument("enumerate_k_compositions: need 1 <= k <= d");
    ExponentSet out{k, d, {}, Order::lex};
    for_each_composition(d, k, [&](const std::vector<unsigned>& c) { out.members.emplace_back(c); });
    return out;
}

Integer multinomial(unsigned d, const Exponent& alpha)
{
    if (alpha.degree() != d)
        throw std::invalid_argument("multinomial: |alpha| = " + std::to_string(alpha.degree()) +
                                    " differs from d = " + std::to_string(d));
    Integer r = factorial(d);
    for (unsigned a : alpha.entries())
        r /= factorial(a);
    return r;
}

bool is_full_enumeration(const ExponentSet& set)
{
    if (set.n == 0 || set.d == 0)
        return false;
    if (Integer(static_cast<unsigned long>(set.size())) != count_weak_compositions(set.n, set.d))
        return false;
    std::set<Exponent> seen;
    for (const auto& e : set.members) {
        if (e.size() != set.n || e.degree() != set.d)
            return false;
        if (!seen.insert(e).second)
            return false;
    }
    return true;
}

}  // namespace ppm
