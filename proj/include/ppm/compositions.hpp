#pragma once

// Weak compositions B(n,d) and strict k-compositions of d: the index sets of
// every power-product matrix.

#include "ppm/integer.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace ppm {

/// A vector of nonnegative integers; its degree is the sum of its entries.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<unsigned> entries) : entries_(std::move(entries)) {}
    Exponent(std::initializer_list<unsigned> entries) : entries_(entries) {}

    std::size_t size() const { return entries_.size(); }
    unsigned operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<unsigned>& entries() const { return entries_; }

    unsigned degree() const;
    /// Number of nonzero entries (the zero norm).
    unsigned support_size() const;
    /// Bit i set iff entry i is nonzero. Requires size() <= 64.
    unsigned long long support_mask() const;

    friend bool operator==(const Exponent&, const Exponent&) = default;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;

private:
    std::vector<unsigned> entries_;
};

std::string to_string(const Exponent& e);

enum class Order { input, lex, canonical_block };

std::string to_string(Order order);
Order parse_order(const std::string& text);

/// An ordered family of exponents of common length n and degree d.
struct ExponentSet {
    unsigned n = 0;
    unsigned d = 0;
    std::vector<Exponent> members;
    Order order = Order::input;

    std::size_t size() const { return members.size(); }
    const Exponent& operator[](std::size_t i) const { return members[i]; }
};

/// s_{n,d} = C(d+n-1, d). Throws std::invalid_argument if n or d is zero.
Integer count_weak_compositions(unsigned n, unsigned d);

/// All weak compositions of d into n parts in lex-descending order
/// ((d,0,..,0) first, (0,..,0,d) last).
ExponentSet enumerate_B(unsigned n, unsigned d);

/// All compositions of d into k positive parts, lex-descending.
/// Requires 1 <= k <= d.
ExponentSet enumerate_k_compositions(unsigned d, unsigned k);

/// d! / (alpha_1! ... alpha_n!). Throws if |alpha| != d.
Integer multinomial(unsigned d, const Exponent& alpha);

/// True iff `set` lists every member of B(set.n, set.d) exactly once.
bool is_full_enumeration(const ExponentSet& set);

/// Calls fn(const std::vector<unsigned>&) for every composition of `total`
/// into `parts` positive parts, lex-descending. parts == 0 yields the empty
/// composition when total == 0 and nothing otherwise.
template <typename Fn>
void for_each_composition(unsigned total, unsigned parts, Fn&& fn)
{
    if (parts == 0) {
        if (total == 0)
            fn(std::vector<unsigned>{});
        return;
    }
    if (total < parts)
        return;
    // Step through weak compositions of (total - parts) and lift by one.
    std::vector<unsigned> weak(parts, 0);
    weak[0] = total - parts;
    std::vector<unsigned> strict(parts);
    for (;;) {
        for (unsigned i = 0; i < parts; ++i)
            strict[i] = weak[i] + 1;
        fn(static_cast<const std::vector<unsigned>&>(strict));
        // successor: rightmost nonzero position before the last one
        int j = static_cast<int>(parts) - 2;
        while (j >= 0 && weak[j] == 0)
            --j;
        if (j < 0)
            return;
        unsigned tail = weak[parts - 1];
        weak[parts - 1] = 0;
        --weak[j];
        weak[j + 1] = tail + 1;
    }
}

}  // namespace ppm
