#include "ppm/identities.hpp"

#include "ppm/compositions.hpp"

#include <algorithm>
#include <numeric>

namespace ppm {

std::string to_string(const std::vector<unsigned>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string to_string(const Couple& c)
{
    std::string s = "({";
    for (std::size_t i = 0; i < c.subset.size(); ++i)
        s += (i ? "," : "") + std::to_string(c.subset[i]);
    return s + "}, " + to_string(c.theta) + ")";
}

Integer signless_stirling(unsigned m, unsigned k)
{
    if (k > m)
        return 0;
    std::vector<std::vector<Integer>> c(m + 1, std::vector<Integer>(m + 1, 0));
    c[0][0] = 1;
    for (unsigned i = 1; i <= m; ++i)
        for (unsigned j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + Integer(i - 1) * c[i - 1][j];
    return c[m][k];
}

namespace {

Integer product_of(const std::vector<unsigned>& a)
{
    Integer p = 1;
    for (unsigned v : a)
        p *= v;
    return p;
}

// Σ_{k=r}^n Σ_{a ⊨ n, k parts} (-1)^(n-k) (n-k)! / (n! n^(n-k) a_1..a_k)
//   · C(n-r, k-r) · a_1^b_1 ... a_r^b_r
Rational weighted_composition_sum(unsigned n, const std::vector<unsigned>& b)
{
    const unsigned r = static_cast<unsigned>(b.size());
    const Integer n_fact = factorial(n);
    Rational total = 0;
    for (unsigned k = r; k <= n; ++k) {
        Rational scale(factorial(n - k) * binomial(n - r, k - r), n_fact * ipow(n, n - k));
        scale.canonicalize();
        if ((n - k) % 2 == 1)
            scale = -scale;
        Rational inner = 0;
        for_each_composition(n, k, [&](const std::vector<unsigned>& a) {
            Integer head = 1;
            for (unsigned i = 0; i < r; ++i)
                head *= ipow(a[i], b[i]);
            Rational term(head, product_of(a));
            term.canonicalize();
            inner += term;
        });
        total += scale * inner;
    }
    return total;
}

void require_parts(unsigned n, const std::vector<unsigned>& b)
{
    if (b.empty() || b.size() > n)
        throw std::invalid_argument("need 1 <= r <= n, got r = " + std::to_string(b.size()));
    for (unsigned v : b)
        if (v == 0)
            throw std::invalid_argument("parts of b must be positive");
}

unsigned sum_of(const std::vector<unsigned>& b)
{
    return std::accumulate(b.begin(), b.end(), 0u);
}

}  // namespace

IdentityCheck verify_gf_identity(unsigned m, unsigned n)
{
    if (n <= m)
        throw std::invalid_argument("verify_gf_identity: need n > m");
    IdentityCheck check;
    check.lhs = 0;
    for (unsigned k = 0; k <= m; ++k) {
        Integer numerator = ipow(Integer(n), k);
        if (k % 2 == 1)
            numerator = -numerator;
        for_each_composition(m, k, [&](const std::vector<unsigned>& a) {
            Rational term(numerator, factorial(k) * product_of(a));
            term.canonicalize();
            check.lhs += term;
        });
    }
    check.rhs = Rational(m % 2 == 0 ? binomial(n, m) : Integer(-binomial(n, m)));
    check.holds = check.lhs == check.rhs;
    return check;
}

IdentityCheck verify_rearrangement(unsigned n, const std::vector<unsigned>& b)
{
    require_parts(n, b);
    const unsigned r = static_cast<unsigned>(b.size());
    IdentityCheck check;
    check.lhs = weighted_composition_sum(n, b);

    Integer inner = 0;
    for (unsigned s = r; s <= n; ++s) {
        Integer count = couples_per_subset(s, b);
        Integer signed_term = binomial(n, s) * count;
        inner += s % 2 == 0 ? signed_term : Integer(-signed_term);
    }
    Rational scale(factorial(n - r), factorial(n) * ipow(n, n - r));
    scale.canonicalize();
    if (r % 2 == 1)
        scale = -scale;
    check.rhs = scale * Rational(inner);
    check.holds = check.lhs == check.rhs;
    return check;
}

IdentityCheck verify_delta_identity(unsigned n, const std::vector<unsigned>& b)
{
    require_parts(n, b);
    if (sum_of(b) != n)
        throw std::invalid_argument("verify_delta_identity: parts of b must sum to n");
    IdentityCheck check;
    check.lhs = Rational(multinomial(n, Exponent(b))) * weighted_composition_sum(n, b);
    check.rhs = b.size() == n ? 1 : 0;
    check.holds = check.lhs == check.rhs;
    return check;
}

Integer couples_per_subset(unsigned s, const std::vector<unsigned>& b)
{
    Integer total = 0;
    for_each_composition(s, static_cast<unsigned>(b.size()), [&](const std::vector<unsigned>& a) {
        Integer term = 1;
        for (std::size_t i = 0; i < a.size(); ++i)
            term *= ipow(a[i], b[i] - 1);
        total += term;
    });
    return total;
}

Integer alternating_composition_sum(unsigned n, const std::vector<unsigned>& b)
{
    Integer total = 0;
    for (unsigned s = static_cast<unsigned>(b.size()); s <= n; ++s) {
        Integer term = binomial(n, s) * couples_per_subset(s, b);
        total += s % 2 == 0 ? term : Integer(-term);
    }
    return total;
}

namespace {

std::vector<bool> cut_positions(unsigned n, const std::vector<unsigned>& b)
{
    // is_cut[k] for 1-based k: k = b_1 + ... + b_j for some j
    std::vector<bool> is_cut(n + 1, false);
    unsigned c = 0;
    for (unsigned v : b) {
        c += v;
        if (c <= n)
            is_cut[c] = true;
    }
    return is_cut;
}

void require_couple_params(unsigned n, const std::vector<unsigned>& b)
{
    require_parts(n, b);
    if (sum_of(b) != n)
        throw std::invalid_argument("couples: parts of b must sum to n");
}

}  // namespace

bool is_couple(const Couple& c, unsigned n, const std::vector<unsigned>& b)
{
    if (c.subset.empty() || c.theta.size() != n)
        return false;
    if (!std::is_sorted(c.subset.begin(), c.subset.end()) ||
        std::adjacent_find(c.subset.begin(), c.subset.end()) != c.subset.end())
        return false;
    if (c.subset.front() < 1 || c.subset.back() > n)
        return false;
    for (unsigned v : c.theta)
        if (!std::binary_search(c.subset.begin(), c.subset.end(), v))
            return false;
    if (c.theta[n - 1] != c.subset.back())
        return false;
    auto is_cut = cut_positions(n, b);
    for (unsigned cj = 1; cj <= n; ++cj) {
        if (!is_cut[cj])
            continue;
        unsigned v = c.theta[cj - 1];
        for (unsigned k = 1; k < cj; ++k)
            if (c.theta[k - 1] > v)
                return false;
        for (unsigned k = cj + 1; k <= n; ++k)
            if (c.theta[k - 1] <= v)
                return false;
    }
    return true;
}

std::vector<Couple> enumerate_couples(unsigned n, const std::vector<unsigned>& b)
{
    require_couple_params(n, b);
    if (b.size() >= n)
        throw std::invalid_argument("enumerate_couples: need n > r");
    if (n > 20)
        throw std::invalid_argument("enumerate_couples: n too large for exhaustive enumeration");
    auto is_cut = cut_positions(n, b);
    std::vector<Couple> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        Couple c;
        for (unsigned v = 1; v <= n; ++v)
            if (mask & (1UL << (v - 1)))
                c.subset.push_back(v);
        const unsigned top = c.subset.back();
        c.theta.assign(n, 0);
        // Backtrack over positions; `floor` is the value at the latest cut
        // (later entries must exceed it), `running` the max so far (a cut
        // entry must reach it).
        auto fill = [&](auto&& self, unsigned pos, unsigned floor, unsigned running) -> void {
            if (pos > n) {
                out.push_back(c);
                return;
            }
            for (unsigned v : c.subset) {
                if (v <= floor)
                    continue;
                if (is_cut[pos] && v < running)
                    continue;
                if (pos == n && v != top)
                    continue;
                c.theta[pos - 1] = v;
                self(self, pos + 1, is_cut[pos] ? v : floor, std::max(running, v));
            }
        };
        fill(fill, 1, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer couple_weight_sum(const std::vector<Couple>& couples)
{
    long total = 0;
    for (const auto& c : couples)
        total += c.weight();
    return Integer(total);
}

Couple involution(const Couple& c, unsigned n)
{
    const unsigned top = c.subset.back();
    std::vector<bool> in_s(n + 2, false), in_phi(n + 2, false);
    for (unsigned v : c.subset)
        in_s[v] = true;
    std::vector<unsigned> multiplicity(n + 2, 0);
    for (unsigned v : c.theta) {
        in_phi[v] = true;
        ++multiplicity[v];
    }

    // u = max(U ∪ V), U = S \ Φ(S,θ), V = {w ∉ S : w < max S}
    unsigned u = 0;
    for (unsigned w = 1; w <= n; ++w) {
        bool in_u = in_s[w] && !in_phi[w];
        bool in_v = !in_s[w] && w < top;
        if (in_u || in_v)
            u = w;
    }

    Couple image = c;
    if (u != 0) {
        if (in_s[u])
            image.subset.erase(std::find(image.subset.begin(), image.subset.end(), u));
        else
            image.subset.insert(std::lower_bound(image.subset.begin(), image.subset.end(), u), u);
        return image;
    }

    // Here S = Φ(S,θ) = {1, ..., |S|}.
    unsigned w = 0;
    for (unsigned v = 1; v <= n; ++v)
        if (multiplicity[v] >= 2)
            w = v;
    if (w != 0) {
        if (w == top) {
            if (top >= n)
                throw InvolutionError("repeated value w = max S = " + std::to_string(top) + " is not below n");
            image.subset.push_back(top + 1);
            image.theta[n - 1] += 1;
        } else {
            image.subset.pop_back();
            image.theta[n - 1] -= 1;
        }
        return image;
    }
    if (c.subset.size() != n)
        throw InvolutionError("no repeated value in θ but |S| = " + std::to_string(c.subset.size()) + " != n");
    image.subset.pop_back();
    image.theta[n - 1] -= 1;
    return image;
}

InvolutionReport involution_check(unsigned n, const std::vector<unsigned>& b)
{
    InvolutionReport report;
    report.n = n;
    report.b = b;
    auto couples = enumerate_couples(n, b);
    report.couples = couples.size();
    for (const auto& x : couples) {
        std::optional<Couple> image;
        std::string reason;
        try {
            image = involution(x, n);
            if (!is_couple(*image, n, b))
                reason = "image is not a couple";
            else if (image->weight() != -x.weight())
                reason = "weight is not reversed";
            else if (involution(*image, n) != x)
                reason = "map is not an involution";
        } catch (const InvolutionError& e) {
            reason = e.what();
        }
        if (!reason.empty()) {
            ++report.failures;
            if (!report.first_failure)
                report.first_failure = InvolutionFailure{x, image, reason};
        }
    }
    return report;
}

std::vector<std::vector<unsigned>> all_compositions(unsigned n)
{
    std::vector<std::vector<unsigned>> out;
    for (unsigned r = 1; r <= n; ++r)
        for_each_composition(n, r, [&](const std::vector<unsigned>& b) { out.push_back(b); });
    return out;
}

namespace {

SuiteResult new_suite(std::string name, std::string range)
{
    SuiteResult result;
    result.name = std::move(name);
    result.range = std::move(range);
    return result;
}

void record(SuiteResult& result, bool ok, const std::string& what)
{
    ++result.cases;
    if (!ok) {
        ++result.failures;
        if (!result.first_counterexample)
            result.first_counterexample = what;
    }
}

}  // namespace

SuiteResult run_gf_suite(unsigned m_max, unsigned n_max)
{
    SuiteResult result = new_suite("gf", "0 <= m <= " + std::to_string(m_max) + ", m < n <= " + std::to_string(n_max));
    for (unsigned m = 0; m <= m_max; ++m)
        for (unsigned n = m + 1; n <= n_max; ++n) {
            auto c = verify_gf_identity(m, n);
            record(result, c.holds,
                   "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + to_string(c.lhs) +
                       " != " + to_string(c.rhs));
        }
    return result;
}

SuiteResult run_rearrangement_suite(unsigned n_max)
{
    SuiteResult result = new_suite("rearrangement", "1 <= n <= " + std::to_string(n_max) + ", all b with |b| = n");
    for (unsigned n = 1; n <= n_max; ++n)
        for (const auto& b : all_compositions(n)) {
            auto c = verify_rearrangement(n, b);
            record(result, c.holds,
                   "n=" + std::to_string(n) + " b=" + to_string(b) + ": " + to_string(c.lhs) + " != " +
                       to_string(c.rhs));
        }
    return result;
}

SuiteResult run_delta_suite(unsigned n_max)
{
    SuiteResult result = new_suite("delta", "1 <= n <= " + std::to_string(n_max) + ", all b with |b| = n");
    for (unsigned n = 1; n <= n_max; ++n)
        for (const auto& b : all_compositions(n)) {
            auto c = verify_delta_identity(n, b);
            record(result, c.holds,
                   "n=" + std::to_string(n) + " b=" + to_string(b) + ": " + to_string(c.lhs) + " != " +
                       to_string(c.rhs));
        }
    return result;
}

SuiteResult run_couples_suite(unsigned n_max)
{
    SuiteResult result = new_suite("couples", "2 <= n <= " + std::to_string(n_max) + ", all b with |b| = n, r < n");
    for (unsigned n = 2; n <= n_max; ++n)
        for (const auto& b : all_compositions(n)) {
            if (b.size() >= n)
                continue;
            auto couples = enumerate_couples(n, b);
            Integer weighted = couple_weight_sum(couples);
            Integer alternating = alternating_composition_sum(n, b);
            std::string tag = "n=" + std::to_string(n) + " b=" + to_string(b);
            record(result, weighted == alternating,
                   tag + ": Σ wt = " + weighted.get_str() + " but alternating sum = " + alternating.get_str());
            record(result, weighted == 0, tag + ": Σ wt = " + weighted.get_str() + " != 0");

            std::vector<Integer> per_subset(1UL << n, 0);
            for (const auto& c : couples) {
                unsigned long mask = 0;
                for (unsigned v : c.subset)
                    mask |= 1UL << (v - 1);
                ++per_subset[mask];
            }
            for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
                unsigned s = static_cast<unsigned>(__builtin_popcountl(mask));
                Integer expected = couples_per_subset(s, b);
                record(result, per_subset[mask] == expected,
                       tag + ": subset mask " + std::to_string(mask) + " has " + per_subset[mask].get_str() +
                           " couples, expected " + expected.get_str());
            }
        }
    return result;
}

SuiteResult run_involution_suite(unsigned n_max)
{
    SuiteResult result = new_suite("involution", "2 <= n <= " + std::to_string(n_max) + ", all b with |b| = n, r < n");
    for (unsigned n = 2; n <= n_max; ++n)
        for (const auto& b : all_compositions(n)) {
            if (b.size() >= n)
                continue;
            auto report = involution_check(n, b);
            std::string what = "n=" + std::to_string(n) + " b=" + to_string(b);
            if (report.first_failure) {
                const auto& f = *report.first_failure;
                what += ": " + f.reason + " at " + to_string(f.couple);
                if (f.image)
                    what += " -> " + to_string(*f.image);
            }
            record(result, report.holds(), what);
        }
    return result;
}

}  // namespace ppm
