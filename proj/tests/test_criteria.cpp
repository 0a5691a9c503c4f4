#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "qquot/analysis.hpp"
#include "qquot/criteria.hpp"

#include <map>
#include <numeric>

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

bool all_nonnegative(const IntPolynomial& p)
{
    return nonnegativity(p).nonnegative;
}

}  // namespace

TEST_CASE("thm8 examples")
{
    CHECK(thm8_is_polynomial(5, 2));
    const auto four_two = oracle::quotient_of_q_ints({4}, {2});
    REQUIRE(four_two);
    CHECK(expand(from_quotient_spec({5, 2, 1})) == from_oracle(*four_two));
    CHECK(expand(from_quotient_spec({5, 2, 1})) == IntPolynomial{1, 0, 1});
    CHECK_FALSE(thm8_is_polynomial(12, 2));
    CHECK(thm8_exponent(12, 2, 2) == -1);
    CHECK_THROWS_AS(thm8_is_polynomial(0, 0), std::domain_error);
    CHECK_THROWS_AS(thm8_is_polynomial(5, 6), std::domain_error);
}

TEST_CASE("thm9 examples")
{
    CHECK(thm9_is_polynomial(8, 3));
    CHECK(expand(from_quotient_spec({8, 3, 2})) == IntPolynomial{1, 0, 0, 1});
    CHECK_FALSE(thm9_is_polynomial(9, 4));
    CHECK(cyclotomic_exponent(from_quotient_spec({9, 4, 2}), 4) == -1);
    CHECK(thm9_exponent(9, 4, 4) == -1);
    for (std::int64_t n = 1; n <= 30; ++n) CHECK(thm9_is_polynomial(3 * n + 2, n + 1));
    CHECK_THROWS_AS(thm9_is_polynomial(5, 1), std::domain_error);
    CHECK_THROWS_AS(thm9_is_polynomial(5, 4), std::domain_error);
}

TEST_CASE("closed-form criteria match the cyclotomic test, n <= 100")
{
    for (std::int64_t n = 2; n <= 100; ++n) {
        for (std::int64_t k = 1; k <= n - 1; ++k) {
            const auto e = from_quotient_spec({n, k, 1});
            REQUIRE(thm8_is_polynomial(n, k) == is_polynomial(e));
            if (thm8_is_polynomial(n, k)) {
                const auto p = expand(e);
                REQUIRE(p);
                REQUIRE(all_nonnegative(*p));
            }
        }
        for (std::int64_t k = 2; k <= n - 2; ++k) {
            const auto e = from_quotient_spec({n, k, 2});
            REQUIRE(thm9_is_polynomial(n, k) == is_polynomial(e));
            if (thm9_is_polynomial(n, k)) {
                const auto p = expand(e);
                REQUIRE(p);
                REQUIRE(all_nonnegative(*p));
            }
        }
    }
}

TEST_CASE("floor-formula exponents")
{
    for (std::int64_t n = 2; n <= 60; ++n)
        for (std::int64_t k = 0; k <= n; ++k)
            for (std::int64_t d = 2; d <= n + 5; ++d) {
                REQUIRE(thm8_exponent(n, k, d) == cyclotomic_exponent(from_quotient_spec({n, k, 1}), d));
                REQUIRE(thm9_exponent(n, k, d) == cyclotomic_exponent(from_quotient_spec({n, k, 2}), d));
            }
}

TEST_CASE("lemma5")
{
    CHECK(lemma5_applicable(3, 4, 6));
    CHECK_FALSE(lemma5_applicable(3, 4, 5));
    CHECK_FALSE(lemma5_applicable(2, 4, 10));

    CHECK(lemma5_expression(2, 3, 2) == ratio({6}, {3}));
    const auto oracle_value = oracle::quotient_of_q_ints({6, 2}, {2, 3});
    REQUIRE(oracle_value);
    CHECK(expand(lemma5_expression(2, 3, 2)) == from_oracle(*oracle_value));
    CHECK(expand(lemma5_expression(2, 3, 2)) == IntPolynomial{1, 0, 0, 1});
    CHECK(lemma5_expression(1, 1, 7) == FactoredQExpression::q_integer(7));
    CHECK(lemma5_expression(3, 4, 6) == ratio({12, 6}, {3, 4}));
    CHECK_THROWS_AS(lemma5_expression(2, 4, 10), std::domain_error);
}

TEST_CASE("lemma5 positivity grid")
{
    for (std::int64_t a = 1; a <= 12; ++a)
        for (std::int64_t b = 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const std::int64_t lo = std::max<std::int64_t>(1, (a - 1) * (b - 1));
            for (std::int64_t g = lo; g <= (a - 1) * (b - 1) + 20; ++g) {
                const auto p = expand(lemma5_expression(a, b, g));
                REQUIRE(p);
                REQUIRE(all_nonnegative(*p));
            }
        }
}

TEST_CASE("lemma6 constructions")
{
    CHECK(lemma6_expression(2, 0, Lemma6Variant::A) == ratio({16, 17, 18}, {4, 3, 2}));
    CHECK(lemma6_expression(3, 0, Lemma6Variant::B) == ratio({12, 11, 10}, {6, 5, 4}));
    CHECK(lemma6_degree(2, 0) == 42);
    CHECK(lemma6_degree(2, 1) == 78);
    CHECK(lemma6_degree(3, 0) == 132);
    CHECK(lemma6_order_bound(2, 0) == 32);
    CHECK(lemma6_order_bound(2, 1) == 56);
    CHECK(lemma6_order_bound(3, 0) == 94);
    CHECK_THROWS_AS(lemma6_expression(1, 0, Lemma6Variant::A), std::domain_error);
    CHECK_THROWS_AS(lemma6_expression(2, 0, Lemma6Variant::B), std::domain_error);

    for (auto v : {Lemma6Variant::A, Lemma6Variant::B})
        for (std::int64_t K = 3; K <= 6; ++K)
            for (std::int64_t M = 0; M <= 3; ++M) {
                const auto spec = lemma6_quotient_spec(K, M, v);
                CHECK(spec.k == 2 * K);
                CHECK(spec.l == spec.k - 3);
                CHECK(from_quotient_spec(spec) == lemma6_expression(K, M, v));
            }
}

TEST_CASE("lemma6 suite")
{
    for (auto v : {Lemma6Variant::A, Lemma6Variant::B})
        for (std::int64_t K = v == Lemma6Variant::A ? 2 : 3; K <= 12; ++K)
            for (std::int64_t M = 0; M <= 6; ++M) {
                CAPTURE(K);
                CAPTURE(M);
                const auto e = lemma6_expression(K, M, v);
                const auto p = expand(e);
                REQUIRE(p);
                CHECK(all_nonnegative(*p));
                CHECK(is_reciprocal(*p));
                if (v == Lemma6Variant::A) {
                    CHECK(p->degree() == lemma6_degree(K, M));
                    CHECK(2 * lemma6_order_bound(K, M) > p->degree());
                }
                const auto spec = lemma6_quotient_spec(K, M, v);
                const auto pat = case_classify(spec.n, spec.k, spec.l);
                REQUIRE(pat);
                CHECK(pat->label == (v == Lemma6Variant::A ? Case4Label::Lemma6A : Case4Label::Lemma6B));
                CHECK(pat->lemma6 == Lemma6Params{K, M});
            }
}

TEST_CASE("case_classify examples")
{
    const auto p = case_classify(11, 3, 2);
    REQUIRE(p);
    CHECK(p->label == Case4Label::DistinctFactors);
    REQUIRE(p->assignment.size() == 1);
    CHECK(p->assignment[0].denominator == 3);
    CHECK(p->assignment[0].numerator_args == std::vector<std::int64_t>{9});
    CHECK_FALSE(p->lemma6);

    for (std::int64_t n = 4; n <= 60; ++n)
        for (std::int64_t k = 2; 2 * k <= n; ++k)
            if ((n - k + 1) % k != 0) CHECK_FALSE(case_classify(n, k, k - 1));

    CHECK_THROWS_AS(case_classify(10, 6, 5), std::domain_error);
    CHECK_THROWS_AS(case_classify(20, 6, 1), std::domain_error);
    CHECK(to_string(Case4Label::TwoShareEvenB) == "two-share-even-B");
}

TEST_CASE("case_classify agrees with is_polynomial, n <= 120")
{
    std::map<Case4Label, int> seen;
    for (std::int64_t n = 2; n <= 120; ++n)
        for (std::int64_t k = 2; 2 * k <= n; ++k)
            for (std::int64_t l = std::max<std::int64_t>(1, k - 3); l < k; ++l) {
                const auto pat = case_classify(n, k, l);
                REQUIRE(pat.has_value() == is_polynomial(from_quotient_spec({n, k, l})));
                if (!pat) continue;
                ++seen[pat->label];
                REQUIRE(pat->lemma6.has_value() ==
                        (pat->label == Case4Label::Lemma6A || pat->label == Case4Label::Lemma6B));
                if (pat->lemma6) {
                    const auto v = pat->label == Case4Label::Lemma6A ? Lemma6Variant::A : Lemma6Variant::B;
                    REQUIRE(lemma6_quotient_spec(pat->lemma6->K, pat->lemma6->M, v) == QuotientSpec{n, k, l});
                }
            }
    CHECK(seen[Case4Label::DistinctFactors] > 0);
    CHECK(seen[Case4Label::TwoShareCoprime] > 0);
    CHECK(seen[Case4Label::Lemma6A] > 0);
    CHECK(seen[Case4Label::Lemma6B] > 0);
}

TEST_CASE("rational_q_catalan")
{
    CHECK(rational_q_catalan(5, 2) == IntPolynomial{1, 0, 1});
    CHECK_FALSE(rational_q_catalan(4, 2));
    for (std::int64_t n = 1; n <= 20; ++n) CHECK(rational_q_catalan(n, 1) == IntPolynomial{1});
    CHECK(rational_q_catalan(8, 3) == IntPolynomial{1, 0, 1, 1, 1, 1, 1, 0, 1});
    CHECK_THROWS_AS(rational_q_catalan(0, 0), std::domain_error);
}

TEST_CASE("rational q-Catalan structure, n <= 60")
{
    for (std::int64_t n = 2; n <= 60; ++n)
        for (std::int64_t k = 1; k <= n - 1; ++k) {
            const auto p = rational_q_catalan(n, k);
            REQUIRE(p.has_value() == (std::gcd(k, n - k) == 1));
            if (!p) continue;
            REQUIRE(p->degree() == k * (n - k) - (n - 1));
            REQUIRE(is_reciprocal(*p));
            REQUIRE(is_parity_unimodal(*p));
            REQUIRE(all_nonnegative(*p));
        }
}

TEST_CASE("corollary10")
{
    CHECK(corollary10_expression(1) == ratio({6}, {3}));
    CHECK(expand(corollary10_expression(1)) == IntPolynomial{1, 0, 0, 1});
    CHECK(expand(corollary10_expression(2)) ==
          IntPolynomial{1, 0, 0, 1, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 1, 1, 0, 0, 1});
    for (std::int64_t n = 1; n <= 12; ++n) {
        const auto direct = expand(corollary10_expression(n));
        REQUIRE(direct);
        CHECK(all_nonnegative(*direct));
        CHECK(is_reciprocal(*direct));
        CHECK(corollary10_factored_route(n) == direct);
    }
    CHECK_THROWS_AS(corollary10_expression(0), std::domain_error);
}
