#pragma once

// Closed-form polynomiality criteria and the explicit families they rest on.
// Everything here has a brute-force counterpart in qexpr.hpp and is tested
// against it.

#include "qquot/qexpr.hpp"
#include "qquot/qpoly.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace qquot {

/// gcd(k, n-k) == 1: [n-1]! / ([k]! [n-k]!) is a polynomial. 0 <= k <= n.
bool thm8_is_polynomial(std::int64_t n, std::int64_t k);

/// gcd(k, n-k), gcd(k, n-k-1), gcd(k-1, n-k) all in {1, 2}: the l = 2
/// quotient is a polynomial. Requires 2 <= k <= n-2.
bool thm9_is_polynomial(std::int64_t n, std::int64_t k);

/// Exponent of C_d in the l = 1 quotient [n-1]! / ([k]! [n-k]!) by the floor
/// formula floor((n-1)/d) - floor(k/d) - floor((n-k)/d). d >= 2, 0 <= k <= n.
std::int64_t thm8_exponent(std::int64_t n, std::int64_t k, std::int64_t d);

/// Exponent of C_d in the l = 2 quotient [2]! [n-2]! / ([k]! [n-k]!):
/// floor((n-2)/d) - floor(k/d) - floor((n-k)/d), plus 1 at d = 2.
/// d >= 2, 0 <= k <= n, n >= 2.
std::int64_t thm9_exponent(std::int64_t n, std::int64_t k, std::int64_t d);

/// gcd(a, b) == 1 and gamma >= (a-1)(b-1).
bool lemma5_applicable(std::int64_t a, std::int64_t b, std::int64_t gamma);

/// [ab] [gamma] / ([a] [b]). Requires lemma5_applicable.
FactoredQExpression lemma5_expression(std::int64_t a, std::int64_t b, std::int64_t gamma);

enum class Lemma6Variant { A, B };

std::string_view to_string(Lemma6Variant v);

/// Three consecutive q-integers over [2K][2K-1][2K-2].
/// Variant A needs K >= 2, variant B needs K >= 3.
FactoredQExpression lemma6_expression(std::int64_t K, std::int64_t M, Lemma6Variant v);

/// The (n, k, l = k-3) triple whose quotient is lemma6_expression(K, M, v).
QuotientSpec lemma6_quotient_spec(std::int64_t K, std::int64_t M, Lemma6Variant v);

/// Degree of the variant A polynomial, 24K(K-1) + 6MK(K-1)(2K-1) - 6K + 6.
std::int64_t lemma6_degree(std::int64_t K, std::int64_t M);

/// Order of the leftover series in the variant A positivity argument,
/// 16K^2 - 18K + 4 + 4MK(K-1)(2K-1).
std::int64_t lemma6_order_bound(std::int64_t K, std::int64_t M);

enum class Case4Label {
    DistinctFactors,
    TwoShareCoprime,
    TwoShareEvenA,
    TwoShareEvenB,
    AllThreeOddK,
    AllThreeEvenK,
    Lemma6A,
    Lemma6B,
};

std::string_view to_string(Case4Label label);

/// Which numerator arguments a denominator argument divides.
struct DivisorAssignment {
    std::int64_t denominator;
    std::vector<std::int64_t> numerator_args;
};

struct Lemma6Params {
    std::int64_t K;
    std::int64_t M;

    friend bool operator==(const Lemma6Params&, const Lemma6Params&) = default;
};

struct Case4Pattern {
    std::vector<DivisorAssignment> assignment;  // denominators k, k-1, ... in that order
    Case4Label label = Case4Label::DistinctFactors;
    std::optional<Lemma6Params> lemma6;  // set iff label is Lemma6A or Lemma6B
};

/// Divisibility pattern of [n-k+1]..[n-l] / ([l+1]..[k]) for l in
/// {k-1, k-2, k-3}; nullopt when the quotient is not a polynomial.
/// Requires 1 <= l < k <= n/2.
std::optional<Case4Pattern> case_classify(std::int64_t n, std::int64_t k, std::int64_t l);

/// [n choose k]_q / [n]_q, computed from the Gaussian binomial; nullopt when
/// not a polynomial. Requires 0 <= k <= n, n >= 1.
std::optional<IntPolynomial> rational_q_catalan(std::int64_t n, std::int64_t k);

/// prod_{j=1}^{3n} [2j] / (prod_{j=2}^{2n+1} [j] * prod_{j=2}^{n+1} [2j]), n >= 1.
FactoredQExpression corollary10_expression(std::int64_t n);

/// The same polynomial assembled as the l = 2 quotient for (3n+2, n+1) in q^2
/// times prod_{j=3}^{2n+1} (1 + q^j); nullopt if the first factor fails to expand.
std::optional<IntPolynomial> corollary10_factored_route(std::int64_t n);

}  // namespace qquot
