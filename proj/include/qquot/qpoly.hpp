#pragma once

// Dense polynomials in q with arbitrary-precision integer coefficients,
// q-integers, Gaussian binomials and a memoizing cyclotomic table.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace qquot {

using Integer = mpz_class;

class IntPolynomial {
public:
    /// Degree reported for the zero polynomial.
    static constexpr std::int64_t kZeroDegree = std::numeric_limits<std::int64_t>::min();

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(const Integer& c, std::size_t exponent);
    /// 1 - q^k
    static IntPolynomial one_minus_q_pow(std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::int64_t degree() const noexcept;
    std::size_t size() const noexcept { return coeffs_.size(); }

    /// Coefficient of q^i; zero beyond the stored range.
    const Integer& operator[](std::size_t i) const noexcept;
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// Value at q = 1.
    Integer eval_at_one() const;
    /// P(q) -> P(q^k).
    IntPolynomial substitute_power(std::size_t k) const;

    // In-place geometric-factor kernels used by the expansion hot path.
    void mul_one_minus_qk(std::size_t k);
    void mul_one_plus_qk(std::size_t k);
    /// Divides by 1 - q^k if the quotient is a polynomial; leaves *this
    /// untouched and returns false otherwise.
    bool div_one_minus_qk(std::size_t k);

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);

    friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
    friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
    friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
    friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    /// Human form, e.g. "1 - q^2 + 3*q^5".
    std::string to_string() const;

private:
    void trim();

    std::vector<Integer> coeffs_;  // coeffs_[i] is the coefficient of q^i
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b over Z[q], or nullopt when b does not divide a.
/// b must be nonzero (throws std::domain_error).
std::optional<IntPolynomial> poly_div_exact(const IntPolynomial& a, const IntPolynomial& b);

/// a / (1 - q^k) by the recurrence c_i = a_i + c_{i-k}; nullopt when the
/// series does not terminate. k >= 1.
std::optional<IntPolynomial> div_one_minus_qk(const IntPolynomial& a, std::size_t k);

/// [m]_q = 1 + q + ... + q^{m-1}, m >= 1.
IntPolynomial q_int(std::int64_t m);

/// Gaussian binomial [n choose k]_q; zero for k outside [0, n].
IntPolynomial q_binomial(std::int64_t n, std::int64_t k);

/// Memoized table of cyclotomic polynomials C_d(q). Safe for concurrent use;
/// entries are immutable once inserted.
class CyclotomicCache {
public:
    const IntPolynomial& get(std::int64_t d);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::int64_t, std::unique_ptr<const IntPolynomial>> table_;
};

/// C_d(q) for d >= 1, computed as (q^d - 1) / prod_{e | d, e < d} C_e(q).
const IntPolynomial& cyclotomic(std::int64_t d, CyclotomicCache& cache);

/// Process-wide cache.
CyclotomicCache& default_cyclotomic_cache();

}  // namespace qquot
