#include "ppm/determinant.hpp"

#include "ppm/linalg.hpp"
#include "ppm/power_matrices.hpp"
#include "ppm/structure.hpp"

#include <algorithm>
#include <set>

namespace ppm {

std::vector<BlockDeterminant> composition_block_determinants(unsigned d)
{
    std::vector<BlockDeterminant> out;
    for (unsigned k = 1; k <= d; ++k) {
        Integer det = det_bareiss(composition_block(d, k));
        if (det == 0)
            throw NonsingularityViolation("block k=" + std::to_string(k) + " of d=" + std::to_string(d) +
                                          " is singular");
        out.push_back({k, det, factorize(det)});
    }
    return out;
}

DetV det_V_blocks(unsigned n, unsigned d)
{
    if (n == 0 || d == 0)
        throw std::invalid_argument("det_V: n and d must be positive");
    DetV result;
    result.n = n;
    result.d = d;
    result.value = 1;
    for (unsigned k = 1; k <= std::min(n, d); ++k) {
        Integer det = det_bareiss(composition_block(d, k));
        if (det == 0)
            throw NonsingularityViolation("block k=" + std::to_string(k) + " of V(" + std::to_string(n) + "," +
                                          std::to_string(d) + ") is singular");
        unsigned long multiplicity = binomial(n, k).get_ui();
        FactoredInteger f = factorize(det);
        result.value *= ipow(det, multiplicity);
        result.factored.multiply_by(f, multiplicity);
        result.blocks.push_back({k, std::move(det), std::move(f)});
    }
    return result;
}

FactoredInteger det_V(unsigned n, unsigned d)
{
    return det_V_blocks(n, d).factored;
}

Integer det_V_full(unsigned n, unsigned d)
{
    return det_bareiss(build_V(n, d));
}

Integer det_V_permuted(unsigned n, unsigned d)
{
    auto dec = block_decompose(n, d);
    return det_bareiss(build_V(enumerate_B(n, d)).permuted(dec.permutation));
}

Integer det_A_closed(unsigned k, const Integer& a, const Integer& b)
{
    Integer r = ipow(a + b, static_cast<unsigned long>(k) * (k + 1) / 2);
    for (unsigned h = 1; h <= k; ++h)
        r *= factorial(h);
    return r;
}

Integer det_V2_closed(unsigned d)
{
    Integer r = ipow(d, static_cast<unsigned long>(d) * (d + 1) / 2);
    for (unsigned h = 1; h <= d; ++h)
        r *= factorial(h);
    return r;
}

std::vector<unsigned long> primes_up_to(unsigned long bound)
{
    std::vector<unsigned long> primes;
    if (bound < 2)
        return primes;
    std::vector<bool> composite(bound + 1, false);
    for (unsigned long p = 2; p <= bound; ++p) {
        if (composite[p])
            continue;
        primes.push_back(p);
        for (unsigned long q = p * p; q <= bound; q += p)
            composite[q] = true;
    }
    return primes;
}

PrimeSupportCheck check_prime_support(unsigned n, unsigned d)
{
    PrimeSupportCheck check;
    check.n = n;
    check.d = d;
    check.det = factorize(det_V_blocks(n, d).value);
    for (const auto& [p, e] : check.det.factors)
        if (p > d)
            check.outside.push_back(p);
    // An unsplit cofactor has no prime factor <= the trial bound, hence none <= d.
    check.within_small_primes = check.outside.empty() && check.det.cofactor == 1;
    return check;
}

namespace {

unsigned long valuation(const FactoredInteger& f, const Integer& p)
{
    auto it = f.factors.find(p);
    return it == f.factors.end() ? 0 : it->second;
}

}  // namespace

ConjectureReport conjecture_explore(unsigned d, unsigned n_max)
{
    if (d < 2)
        throw std::invalid_argument("conjecture_explore: need d >= 2");
    if (n_max < d + 2)
        throw std::invalid_argument("conjecture_explore: need n_max >= d + 2");

    ConjectureReport report;
    report.d = d;
    report.n_max = n_max;

    auto blocks = composition_block_determinants(d);
    std::set<Integer> primes;
    for (unsigned long p : primes_up_to(d))
        primes.insert(Integer(p));
    for (const auto& b : blocks) {
        report.factorizations_complete = report.factorizations_complete && b.factored.complete;
        for (const auto& [p, e] : b.factored.factors)
            primes.insert(p);
    }

    for (unsigned n = 1; n <= n_max; ++n) {
        auto check = check_prime_support(n, d);
        report.counterexample_found = report.counterexample_found || !check.outside.empty();
        report.factorizations_complete = report.factorizations_complete && check.det.complete;
        report.per_n.push_back(std::move(check));
    }

    for (const auto& p : primes) {
        RationalPolynomial f;
        for (const auto& b : blocks)
            f += RationalPolynomial::binomial_in_n(b.k) * Rational(valuation(b.factored, p));
        report.valuation_polynomials.push_back({p, f});

        std::vector<std::pair<Rational, Rational>> samples;
        for (unsigned n = 1; n <= d; ++n)
            samples.emplace_back(Rational(n), Rational(valuation(report.per_n[n - 1].det, p)));
        report.interpolated_polynomials.push_back({p, RationalPolynomial::interpolate(samples)});
    }

    report.routes_agree = true;
    for (std::size_t i = 0; i < report.valuation_polynomials.size(); ++i)
        report.routes_agree =
            report.routes_agree && report.valuation_polynomials[i].poly == report.interpolated_polynomials[i].poly;

    report.cross_check_passed = true;
    for (unsigned n = d + 1; n <= d + 2; ++n) {
        const auto& direct = report.per_n[n - 1].det;
        for (const auto& ep : report.valuation_polynomials)
            if (ep.poly.evaluate(Rational(n)) != Rational(valuation(direct, ep.prime)))
                report.cross_check_passed = false;
        // Every prime in the direct factorization must have a polynomial.
        for (const auto& [p, e] : direct.factors)
            if (!primes.contains(p))
                report.cross_check_passed = false;
    }
    return report;
}

}  // namespace ppm
