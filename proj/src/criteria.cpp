#include "qquot/criteria.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace qquot {

bool thm8_is_polynomial(std::int64_t n, std::int64_t k)
{
    if (n < 1 || k < 0 || k > n) throw std::domain_error("thm8_is_polynomial requires n >= 1, 0 <= k <= n");
    return std::gcd(k, n - k) == 1;
}

bool thm9_is_polynomial(std::int64_t n, std::int64_t k)
{
    if (k < 2 || k > n - 2) throw std::domain_error("thm9_is_polynomial requires 2 <= k <= n-2");
    auto small = [](std::int64_t g) { return g == 1 || g == 2; };
    return small(std::gcd(k, n - k)) && small(std::gcd(k, n - k - 1)) && small(std::gcd(k - 1, n - k));
}

std::int64_t thm8_exponent(std::int64_t n, std::int64_t k, std::int64_t d)
{
    if (d < 2 || n < 1 || k < 0 || k > n) throw std::domain_error("thm8_exponent requires d >= 2, 0 <= k <= n");
    return (n - 1) / d - k / d - (n - k) / d;
}

std::int64_t thm9_exponent(std::int64_t n, std::int64_t k, std::int64_t d)
{
    if (d < 2 || n < 2 || k < 0 || k > n) throw std::domain_error("thm9_exponent requires d >= 2, 0 <= k <= n");
    return (n - 2) / d - k / d - (n - k) / d + (d == 2 ? 1 : 0);
}

bool lemma5_applicable(std::int64_t a, std::int64_t b, std::int64_t gamma)
{
    if (a < 1 || b < 1) throw std::domain_error("lemma5_applicable requires a, b >= 1");
    return std::gcd(a, b) == 1 && gamma >= (a - 1) * (b - 1);
}

FactoredQExpression lemma5_expression(std::int64_t a, std::int64_t b, std::int64_t gamma)
{
    if (!lemma5_applicable(a, b, gamma) || gamma < 1) {
        throw std::domain_error("lemma5_expression: need coprime a, b and gamma >= max(1, (a-1)(b-1))");
    }
    const std::array<QFactor, 4> f{{{a * b, 1}, {gamma, 1}, {a, -1}, {b, -1}}};
    return FactoredQExpression::from_factors(f);
}

std::string_view to_string(Lemma6Variant v)
{
    return v == Lemma6Variant::A ? "A" : "B";
}

namespace {

// First numerator argument of the variant; the other two follow at +1, +2
// (variant A) or -1, -2 (variant B).
std::int64_t lemma6_base(std::int64_t K, std::int64_t M, Lemma6Variant v)
{
    if (M < 0) throw std::domain_error("lemma6: M must be nonnegative");
    if (v == Lemma6Variant::A) {
        if (K < 2) throw std::domain_error("lemma6 variant A requires K >= 2");
        return 4 * K * (2 * K - 2) + M * K * (2 * K - 1) * (2 * K - 2);
    }
    if (K < 3) throw std::domain_error("lemma6 variant B requires K >= 3");
    return K * (2 * K - 5) * (2 * K - 2) + M * K * (2 * K - 1) * (2 * K - 2);
}

}  // namespace

FactoredQExpression lemma6_expression(std::int64_t K, std::int64_t M, Lemma6Variant v)
{
    const std::int64_t base = lemma6_base(K, M, v);
    const std::int64_t step = v == Lemma6Variant::A ? 1 : -1;
    std::vector<QFactor> f;
    for (std::int64_t i = 0; i <= 2; ++i) f.push_back({base + step * i, 1});
    for (std::int64_t i = 0; i <= 2; ++i) f.push_back({2 * K - i, -1});
    return FactoredQExpression::from_factors(f);
}

QuotientSpec lemma6_quotient_spec(std::int64_t K, std::int64_t M, Lemma6Variant v)
{
    const std::int64_t base = lemma6_base(K, M, v);
    const std::int64_t k = 2 * K;
    // numerator arguments are n-k+1, n-k+2, n-k+3
    const std::int64_t n = v == Lemma6Variant::A ? base + k - 1 : base + k - 3;
    return {n, k, k - 3};
}

std::int64_t lemma6_degree(std::int64_t K, std::int64_t M)
{
    if (K < 2) throw std::domain_error("lemma6_degree requires K >= 2");
    return 24 * K * (K - 1) + 6 * M * K * (K - 1) * (2 * K - 1) - 6 * K + 6;
}

std::int64_t lemma6_order_bound(std::int64_t K, std::int64_t M)
{
    if (K < 2) throw std::domain_error("lemma6_order_bound requires K >= 2");
    return 16 * K * K - 18 * K + 4 + 4 * M * K * (K - 1) * (2 * K - 1);
}

std::string_view to_string(Case4Label label)
{
    switch (label) {
    case Case4Label::DistinctFactors: return "distinct-factors";
    case Case4Label::TwoShareCoprime: return "two-share-coprime";
    case Case4Label::TwoShareEvenA: return "two-share-even-A";
    case Case4Label::TwoShareEvenB: return "two-share-even-B";
    case Case4Label::AllThreeOddK: return "all-three-odd-k";
    case Case4Label::AllThreeEvenK: return "all-three-even-k";
    case Case4Label::Lemma6A: return "lemma6-A";
    case Case4Label::Lemma6B: return "lemma6-B";
    }
    return "?";
}

namespace {

// Can every denominator be matched to its own numerator argument?
bool has_distinct_representatives(const std::vector<std::int64_t>& dens, const std::vector<std::int64_t>& args)
{
    std::vector<std::size_t> perm(args.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < dens.size() && ok; ++i) ok = args[perm[i]] % dens[i] == 0;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::optional<Case4Pattern> case_classify(std::int64_t n, std::int64_t k, std::int64_t l)
{
    if (l < 1 || l >= k || 2 * k > n || k - l > 3) {
        throw std::domain_error("case_classify requires 1 <= l < k <= n/2 and k - l <= 3");
    }
    const std::int64_t width = k - l;
    std::vector<std::int64_t> args;  // n-k+1, n-k+2, ...
    std::vector<std::int64_t> dens;  // k, k-1, ...
    for (std::int64_t i = 0; i < width; ++i) {
        args.push_back(n - k + 1 + i);
        dens.push_back(k - i);
    }

    Case4Pattern pat;
    for (std::int64_t d : dens) {
        DivisorAssignment a{d, {}};
        for (std::int64_t x : args) {
            if (x % d == 0) a.numerator_args.push_back(x);
        }
        if (a.numerator_args.empty()) return std::nullopt;
        pat.assignment.push_back(std::move(a));
    }
    // C_2 bookkeeping; every d >= 3 divides at most one of a run of three
    // consecutive integers, so only d = 2 can be short on the numerator side.
    auto evens = [](const std::vector<std::int64_t>& v) {
        return std::count_if(v.begin(), v.end(), [](std::int64_t x) { return x % 2 == 0; });
    };
    if (evens(dens) > evens(args)) return std::nullopt;

    const bool distinct = has_distinct_representatives(dens, args);
    if (width < 3) {
        pat.label = distinct ? Case4Label::DistinctFactors : Case4Label::TwoShareCoprime;
        return pat;
    }

    const std::int64_t lo = args[0];
    const std::int64_t mid = args[1];
    const std::int64_t hi = args[2];
    for (std::int64_t x : args) {
        if (x % k == 0 && x % (k - 1) == 0 && x % (k - 2) == 0) {
            pat.label = k % 2 == 1 ? Case4Label::AllThreeOddK : Case4Label::AllThreeEvenK;
            return pat;
        }
    }

    std::optional<Case4Label> share_even;
    if (k % 2 == 0) {
        const std::int64_t K = k / 2;
        const std::int64_t unit = K * (2 * K - 2);  // lcm(k, k-2)
        for (std::int64_t shared : {lo, hi}) {
            if (shared % k != 0 || shared % (k - 2) != 0) continue;
            if (mid % (k - 1) == 0) {
                share_even = shared == lo ? Case4Label::TwoShareEvenA : Case4Label::TwoShareEvenB;
            } else if (shared == lo && hi % (k - 1) == 0) {
                const std::int64_t m = lo / unit;
                if ((m - 4) % (2 * K - 1) != 0 || m < 4) {
                    throw std::logic_error("case_classify: variant A shape without a valid (K, M)");
                }
                pat.label = Case4Label::Lemma6A;
                pat.lemma6 = Lemma6Params{K, (m - 4) / (2 * K - 1)};
                return pat;
            } else if (shared == hi && lo % (k - 1) == 0 && K >= 3) {
                const std::int64_t m = hi / unit;
                const std::int64_t offset = m - (2 * K - 5);
                if (offset < 0 || offset % (2 * K - 1) != 0) {
                    throw std::logic_error("case_classify: variant B shape without a valid (K, M)");
                }
                pat.label = Case4Label::Lemma6B;
                pat.lemma6 = Lemma6Params{K, offset / (2 * K - 1)};
                return pat;
            }
        }
    }

    if (distinct) {
        pat.label = Case4Label::DistinctFactors;
    } else if (share_even) {
        pat.label = *share_even;
    } else {
        pat.label = Case4Label::TwoShareCoprime;
    }
    return pat;
}

std::optional<IntPolynomial> rational_q_catalan(std::int64_t n, std::int64_t k)
{
    if (n < 1 || k < 0 || k > n) throw std::domain_error("rational_q_catalan requires n >= 1, 0 <= k <= n");
    IntPolynomial p = q_binomial(n, k);
    p.mul_one_minus_qk(1);
    if (!p.div_one_minus_qk(static_cast<std::size_t>(n))) return std::nullopt;
    return p;
}

FactoredQExpression corollary10_expression(std::int64_t n)
{
    if (n < 1) throw std::domain_error("corollary10_expression requires n >= 1");
    std::vector<QFactor> f;
    for (std::int64_t j = 1; j <= 3 * n; ++j) f.push_back({2 * j, 1});
    for (std::int64_t j = 2; j <= 2 * n + 1; ++j) f.push_back({j, -1});
    for (std::int64_t j = 2; j <= n + 1; ++j) f.push_back({2 * j, -1});
    return FactoredQExpression::from_factors(f);
}

std::optional<IntPolynomial> corollary10_factored_route(std::int64_t n)
{
    if (n < 1) throw std::domain_error("corollary10_factored_route requires n >= 1");
    auto core = expand(from_quotient_spec({3 * n + 2, n + 1, 2}));
    if (!core) return std::nullopt;
    IntPolynomial p = core->substitute_power(2);
    // (-q^3; q)_{2n-1}
    for (std::int64_t j = 3; j <= 2 * n + 1; ++j) p.mul_one_plus_qk(static_cast<std::size_t>(j));
    return p;
}

}  // namespace qquot
