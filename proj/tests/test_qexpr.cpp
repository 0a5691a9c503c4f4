#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "qquot/analysis.hpp"
#include "qquot/criteria.hpp"
#include "qquot/qexpr.hpp"

#include <random>

using namespace qquot;

namespace {

IntPolynomial from_oracle(const oracle::Coeffs& c)
{
    return IntPolynomial(std::vector<Integer>(c.begin(), c.end()));
}

FactoredQExpression ratio(std::vector<std::int64_t> num, std::vector<std::int64_t> den)
{
    std::vector<QFactor> f;
    for (auto m : num) f.push_back({m, 1});
    for (auto m : den) f.push_back({m, -1});
    return FactoredQExpression::from_factors(f);
}

// Expand the numerator and denominator products separately and long-divide.
std::optional<IntPolynomial> oracle_expand(const FactoredQExpression& e)
{
    std::vector<std::int64_t> num, den;
    for (const auto& f : e.factors())
        for (std::int64_t i = 0; i < (f.exp > 0 ? f.exp : -f.exp); ++i) (f.exp > 0 ? num : den).push_back(f.arg);
    auto r = oracle::quotient_of_q_ints(num, den);
    if (!r) return std::nullopt;
    return from_oracle(*r);
}

}  // namespace

TEST_CASE("canonical factor lists")
{
    const std::vector<QFactor> raw{{5, 1}, {1, 4}, {3, 2}, {5, -1}, {2, -1}, {3, 1}};
    const auto e = FactoredQExpression::from_factors(raw);
    REQUIRE(e.factors().size() == 2);
    CHECK(e.factors()[0] == QFactor{2, -1});
    CHECK(e.factors()[1] == QFactor{3, 3});
    CHECK(e.to_string() == "[3]^3 / [2]");
    CHECK(FactoredQExpression{}.to_string() == "1");
    CHECK(FactoredQExpression{}.max_arg() == 1);
    CHECK((e * e.inverse()).is_one());
    const std::vector<QFactor> bad{{0, 1}};
    CHECK_THROWS_AS(FactoredQExpression::from_factors(bad), std::domain_error);
}

TEST_CASE("from_quotient_spec")
{
    CHECK(from_quotient_spec({7, 3, 3}).is_one());
    CHECK(from_quotient_spec({11, 3, 2}) == ratio({9}, {3}));
    CHECK(from_quotient_spec({8, 3, 2}) == ratio({6}, {3}));
    CHECK(from_quotient_spec({11, 3, 2}).to_string() == "[9] / [3]");
    CHECK_THROWS_AS(from_quotient_spec({5, 6, 1}), std::domain_error);
    CHECK_THROWS_AS(from_quotient_spec({5, 2, -1}), std::domain_error);
}

TEST_CASE("from_fake_gaussian")
{
    CHECK(from_fake_gaussian({1, {1}}) == FactoredQExpression::q_integer(2));
    CHECK_THROWS_AS(from_fake_gaussian({0, {1}}), std::domain_error);
    CHECK_THROWS_AS(from_fake_gaussian({1, {1, -1}}), std::domain_error);

    // (0^l, 1^{n-k-l}, 0^l) with m = k - l and n -> n - k + l recovers the quotient.
    for (std::int64_t n = 2; n <= 30; ++n)
        for (std::int64_t k = 1; 2 * k <= n; ++k)
            for (std::int64_t l = 0; l < k; ++l) {
                const std::int64_t len = n - k + l;
                std::vector<std::int64_t> a(static_cast<std::size_t>(len), 0);
                for (std::int64_t i = l; i < len - l; ++i) a[static_cast<std::size_t>(i)] = 1;
                CHECK(from_fake_gaussian({k - l, a}) == from_quotient_spec({n, k, l}));
            }

    const FakeGaussianSpec stanton{1, {1, 3, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1}};
    CHECK_FALSE(stanton.symmetric());
    CHECK(FakeGaussianSpec{3, {0, 2, 5, 2, 0}}.symmetric());
    const auto e = from_fake_gaussian(stanton);
    CHECK(e.max_arg() == 18);
    CHECK(is_polynomial(e));
}

TEST_CASE("normalize keeps the quotient")
{
    CHECK(normalize({10, 7, 9}) == QuotientSpec{10, 3, 1});
    CHECK(normalize({10, 3, 1}) == QuotientSpec{10, 3, 1});
    // l > k after reduction is kept as is: swapping would invert the value.
    CHECK(normalize({10, 1, 4}) == QuotientSpec{10, 1, 4});
    for (std::int64_t n = 1; n <= 16; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            for (std::int64_t l = 0; l <= n; ++l)
                REQUIRE(from_quotient_spec(normalize({n, k, l})) == from_quotient_spec({n, k, l}));
}

TEST_CASE("cyclotomic exponents")
{
    const auto e = ratio({9}, {3});
    CHECK(cyclotomic_exponent(e, 3) == 0);
    CHECK(cyclotomic_exponent(e, 9) == 1);
    CHECK(cyclotomic_exponent(from_quotient_spec({12, 2, 1}), 2) == -1);
    CHECK(from_quotient_spec({12, 2, 1}) == ratio({11}, {2}));
    CHECK_THROWS_AS(cyclotomic_exponent(e, 1), std::domain_error);

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> arg(1, 60), ex(-3, 3);
    for (int t = 0; t < 100; ++t) {
        std::vector<QFactor> f;
        for (int i = 0; i < 6; ++i) f.push_back({arg(rng), ex(rng)});
        const auto expr = FactoredQExpression::from_factors(f);
        const auto all = cyclotomic_exponents(expr);
        for (std::int64_t d = 2; d < static_cast<std::int64_t>(all.size()); ++d)
            REQUIRE(all[static_cast<std::size_t>(d)] == cyclotomic_exponent(expr, d));
        // nothing above the largest argument
        for (std::int64_t d = expr.max_arg() + 1; d <= expr.max_arg() + 20; ++d)
            REQUIRE(cyclotomic_exponent(expr, d) == 0);
    }
}

TEST_CASE("is_polynomial examples")
{
    CHECK(is_polynomial(ratio({9}, {3})));
    CHECK_FALSE(is_polynomial(ratio({5}, {3})));
    CHECK(is_polynomial(ratio({16, 17, 18}, {4, 3, 2})));
    CHECK(is_polynomial(FactoredQExpression{}));
}

TEST_CASE("expand examples")
{
    CHECK(expand(ratio({9}, {3})) == IntPolynomial{1, 0, 0, 1, 0, 0, 1});
    CHECK(expand(FactoredQExpression{}) == IntPolynomial{1});
    const auto six_three = oracle::quotient_of_q_ints({6}, {3});
    REQUIRE(six_three);
    CHECK(expand(from_quotient_spec({8, 3, 2})) == from_oracle(*six_three));
    CHECK_FALSE(expand(ratio({5}, {3})));
    CHECK_FALSE(expand(ratio({2}, {3, 4})));
    CHECK(expand(ratio({2, 2, 2}, {})) == IntPolynomial{1, 3, 3, 1});
}

TEST_CASE("net_degree")
{
    CHECK(net_degree(ratio({9}, {3})) == 6);
    CHECK(net_degree(ratio({16, 17, 18}, {4, 3, 2})) == 42);
    CHECK(net_degree(FactoredQExpression{}) == 0);
}

TEST_CASE("divisors")
{
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::int64_t>{1, 7, 49});
}

TEST_CASE("expand agrees with the long-division oracle on random quotients")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> arg(1, 24), count(0, 4);
    int polys = 0;
    for (int t = 0; t < 300; ++t) {
        std::vector<std::int64_t> num, den;
        for (auto c = count(rng) + 1; c > 0; --c) num.push_back(arg(rng));
        for (auto c = count(rng); c > 0; --c) den.push_back(arg(rng));
        const auto e = ratio(num, den);
        const auto fast = expand(e);
        const auto slow = oracle_expand(e);
        REQUIRE(fast.has_value() == slow.has_value());
        REQUIRE(is_polynomial(e) == fast.has_value());
        if (fast) {
            ++polys;
            CHECK(*fast == *slow);
        }
    }
    CHECK(polys > 20);
}

TEST_CASE("two expansion routes agree")
{
    CyclotomicCache cache;
    for (std::int64_t n = 2; n <= 40; ++n)
        for (std::int64_t k = 1; 2 * k <= n; ++k)
            for (std::int64_t l = 0; l < k; ++l) {
                const auto e = from_quotient_spec({n, k, l});
                const auto a = expand(e);
                const auto b = expand_via_cyclotomics(e, cache);
                REQUIRE(a.has_value() == b.has_value());
                if (a) REQUIRE(*a == *b);
            }
    CHECK(expand_via_cyclotomics(ratio({16, 17, 18}, {4, 3, 2}), cache) == expand(ratio({16, 17, 18}, {4, 3, 2})));
}

TEST_CASE("is_polynomial iff expand succeeds, random fake Gaussian specs")
{
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<std::int64_t> len(1, 8), val(0, 3), mdist(1, 12);
    int polys = 0, non = 0;
    for (int t = 0; t < 400; ++t) {
        FakeGaussianSpec s{mdist(rng), {}};
        for (auto c = len(rng); c > 0; --c) s.a.push_back(val(rng));
        const auto e = from_fake_gaussian(s);
        const auto x = expand(e);
        REQUIRE(is_polynomial(e) == x.has_value());
        (x ? polys : non) += 1;
        if (x) CHECK(x->degree() == net_degree(e));
    }
    CHECK(polys > 0);
    CHECK(non > 0);
}

TEST_CASE("l = 1 and l = 2 exponents follow the floor formulas, n <= 120")
{
    for (std::int64_t n = 2; n <= 120; ++n)
        for (std::int64_t k = 0; k <= n; ++k) {
            const auto e1 = from_quotient_spec({n, k, 1});
            const auto e2 = from_quotient_spec({n, k, 2 <= n ? 2 : n});
            for (std::int64_t d = 2; d <= n; ++d) {
                REQUIRE(cyclotomic_exponent(e1, d) == (n - 1) / d - k / d - (n - k) / d);
                REQUIRE(cyclotomic_exponent(e2, d) == (n - 2) / d - k / d - (n - k) / d + (d == 2));
            }
        }
}

TEST_CASE("polynomial quotients are reciprocal with constant term 1")
{
    for (std::int64_t n = 2; n <= 50; ++n)
        for (std::int64_t k = 1; 2 * k <= n; ++k)
            for (std::int64_t l = 0; l < k; ++l) {
                const auto p = expand(from_quotient_spec({n, k, l}));
                if (!p) continue;
                REQUIRE(is_reciprocal(*p));
                REQUIRE((*p)[0] == 1);
            }
}

TEST_CASE("l = 0 gives the q-binomial, n <= 60")
{
    for (std::int64_t n = 0; n <= 60; ++n)
        for (std::int64_t k = 0; k <= n; ++k) REQUIRE(expand(from_quotient_spec({n, k, 0})) == q_binomial(n, k));
}

TEST_CASE("factorial_quotient telescopes")
{
    const std::vector<FactorialPower> num{{12}, {2, 2}};
    const std::vector<FactorialPower> den{{11}, {4}, {1}};
    CHECK(factorial_quotient(num, den) == ratio({12, 2, 2}, {2, 3, 4}));
    const std::vector<FactorialPower> same{{6, 3}};
    CHECK(factorial_quotient(same, same).is_one());
}
