#include "ppm/integer.hpp"

#include <stdexcept>

namespace ppm {

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer ipow(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::string to_string(const Integer& value)
{
    return value.get_str(10);
}

std::string to_string(const Rational& value)
{
    return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

}  // namespace

Integer parse_integer(std::string_view text)
{
    if (!is_integer_literal(text))
        throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s[0] == '+')
        s.erase(0, 1);
    return Integer(s, 10);
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    Integer q = parse_integer(den);
    if (q == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    Rational r(parse_integer(num), q);
    r.canonicalize();
    return r;
}

std::string to_decimal(const Rational& value, unsigned places)
{
    Integer scale = ipow(10, places);
    Integer num = abs(value.get_num()) * scale;
    Integer den = value.get_den();
    // round half away from zero
    Integer scaled = (2 * num + den) / (2 * den);
    std::string digits = scaled.get_str(10);
    if (digits.size() <= places)
        digits.insert(0, places + 1 - digits.size(), '0');
    std::string out;
    if (value < 0 && scaled != 0)
        out += '-';
    out += digits.substr(0, digits.size() - places);
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - places);
    }
    return out;
}

}  // namespace ppm
