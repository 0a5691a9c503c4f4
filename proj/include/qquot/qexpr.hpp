#pragma once

// Products and quotients of q-integers kept in factored form.
//
// A FactoredQExpression is prod [m]_q^e over a canonical factor list. Since
// [m]_q = prod_{d | m, d >= 2} C_d(q), the expression is a polynomial exactly
// when every cyclotomic exponent sum_{d | m} e is nonnegative, which turns the
// polynomiality question into divisor arithmetic.

#include "qquot/qpoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qquot {

struct QFactor {
    std::int64_t arg;  // m >= 2 in canonical form
    std::int64_t exp;  // nonzero

    friend bool operator==(const QFactor&, const QFactor&) = default;
};

class FactoredQExpression {
public:
    /// The empty product.
    FactoredQExpression() = default;

    /// Canonicalizes: sorts by argument, merges duplicates, drops [1]_q and
    /// zero exponents. Arguments must be positive.
    static FactoredQExpression from_factors(std::span<const QFactor> factors);
    static FactoredQExpression q_integer(std::int64_t m, std::int64_t exp = 1);

    const std::vector<QFactor>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    /// Largest argument, or 1 for the empty product.
    std::int64_t max_arg() const noexcept;

    FactoredQExpression inverse() const;
    friend FactoredQExpression operator*(const FactoredQExpression& a, const FactoredQExpression& b);
    friend bool operator==(const FactoredQExpression&, const FactoredQExpression&) = default;

    /// e.g. "[16][17][18] / ([2][3][4])", "[2]^3 / [5]", "1".
    std::string to_string() const;

private:
    std::vector<QFactor> factors_;
};

/// (n, k, l): the quotient [l]! [n-l]! / ([k]! [n-k]!).
struct QuotientSpec {
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t l = 0;

    friend bool operator==(const QuotientSpec&, const QuotientSpec&) = default;
    friend auto operator<=>(const QuotientSpec&, const QuotientSpec&) = default;
};

/// (m; a_1..a_n): prod_i ((1 - q^{m+i}) / (1 - q^i))^{a_i}.
struct FakeGaussianSpec {
    std::int64_t m = 1;
    std::vector<std::int64_t> a;

    bool symmetric() const noexcept;
    friend bool operator==(const FakeGaussianSpec&, const FakeGaussianSpec&) = default;
};

/// Factorial argument with multiplicity: ([arg]_q!)^power.
struct FactorialPower {
    std::int64_t arg;
    std::int64_t power = 1;
};

/// prod numerator factorials / prod denominator factorials, telescoped into
/// q-integer factors.
FactoredQExpression factorial_quotient(std::span<const FactorialPower> numerator,
                                       std::span<const FactorialPower> denominator);

/// Requires k <= n and l <= n (throws std::domain_error).
FactoredQExpression from_quotient_spec(const QuotientSpec& spec);
/// Requires m >= 1 and all a_i >= 0.
FactoredQExpression from_fake_gaussian(const FakeGaussianSpec& spec);

/// Symmetry reduction k -> min(k, n-k), l -> min(l, n-l). The quotient is
/// unchanged; k and l are never swapped since that would invert it.
QuotientSpec normalize(const QuotientSpec& spec);

/// Exponent of C_d(q) in the expression, d >= 2.
std::int64_t cyclotomic_exponent(const FactoredQExpression& expr, std::int64_t d);
/// All exponents at once; index d holds the exponent of C_d for 2 <= d <= max_arg
/// (indices 0 and 1 are zero).
std::vector<std::int64_t> cyclotomic_exponents(const FactoredQExpression& expr);

bool is_polynomial(const FactoredQExpression& expr);

/// sum e * (m - 1); the degree of the expansion when it is a polynomial.
std::int64_t net_degree(const FactoredQExpression& expr);

/// Exact expansion by interleaved geometric multiplications and divisions;
/// nullopt when the expression is not a polynomial.
std::optional<IntPolynomial> expand(const FactoredQExpression& expr);

/// Independent route: prod_d C_d(q)^{exponent(d)}; nullopt when some exponent
/// is negative. Slow, used for cross-checking.
std::optional<IntPolynomial> expand_via_cyclotomics(const FactoredQExpression& expr,
                                                    CyclotomicCache& cache = default_cyclotomic_cache());

/// Positive divisors of m in increasing order.
std::vector<std::int64_t> divisors(std::int64_t m);

}  // namespace qquot
