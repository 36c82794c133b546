#include "ppm/factor.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ppm {

Integer FactoredInteger::value() const
{
    Integer v = sign;
    for (const auto& [p, e] : factors)
        v *= ipow(p, e);
    return v * cofactor;
}

Integer FactoredInteger::largest_prime() const
{
    return factors.empty() ? Integer(1) : factors.rbegin()->first;
}

std::string FactoredInteger::to_string() const
{
    std::string s = sign < 0 ? "-" : "";
    bool first = true;
    for (const auto& [p, e] : factors) {
        if (!first)
            s += " * ";
        s += p.get_str();
        if (e != 1)
            s += "^" + std::to_string(e);
        first = false;
    }
    if (cofactor != 1) {
        s += first ? "" : " * ";
        s += "[" + cofactor.get_str() + "]";
        first = false;
    }
    return first ? s + "1" : s;
}

void FactoredInteger::multiply_by(const FactoredInteger& other, unsigned long power)
{
    if (power == 0)
        return;
    if (other.sign < 0 && power % 2 == 1)
        sign = -sign;
    for (const auto& [p, e] : other.factors)
        factors[p] += e * power;
    if (other.cofactor != 1) {
        cofactor *= ipow(other.cofactor, power);
        complete = false;
    }
    complete = complete && other.complete;
}

bool is_probable_prime(const Integer& v)
{
    return v > 1 && mpz_probab_prime_p(v.get_mpz_t(), 30) != 0;
}

namespace {

// Brent's variant of Pollard rho. Returns a nontrivial factor, or 0 if the
// budget ran out.
Integer pollard_brent(const Integer& n, unsigned long& budget)
{
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (unsigned long c = 1; budget > 0; ++c) {
        Integer y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1;
        constexpr unsigned long m = 128;
        auto step = [&](Integer& v) {
            v = v * v + c;
            v %= n;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    q = (q * abs(x - y)) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
                budget = budget > m ? budget - m : 0;
            } while (k < r && g == 1 && budget > 0);
            r *= 2;
        } while (g == 1 && budget > 0);
        if (g == 1)
            return 0;
        if (g == n) {
            // Backtrack one step at a time.
            do {
                step(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
    return 0;
}

}  // namespace

FactoredInteger factorize(const Integer& v, const FactorLimits& limits)
{
    if (v == 0)
        throw std::invalid_argument("factorize: zero has no factorization");
    FactoredInteger out;
    out.sign = v < 0 ? -1 : 1;
    Integer rest = abs(v);

    for (unsigned long p = 2; p <= limits.trial_bound && rest > 1; p += (p == 2 ? 1 : 2)) {
        if (Integer(p) * p > rest)
            break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++out.factors[Integer(p)];
        }
    }
    if (rest == 1)
        return out;

    unsigned long budget = limits.rho_iterations;
    std::vector<Integer> pending{rest};
    while (!pending.empty()) {
        Integer m = pending.back();
        pending.pop_back();
        if (m == 1)
            continue;
        if (is_probable_prime(m)) {
            ++out.factors[m];
            continue;
        }
        Integer f = pollard_brent(m, budget);
        if (f == 0) {
            out.complete = false;
            out.cofactor *= m;
            continue;
        }
        pending.push_back(f);
        pending.push_back(m / f);
    }
    return out;
}

}  // namespace ppm
