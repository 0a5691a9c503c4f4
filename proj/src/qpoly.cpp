#include "qquot/qpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qquot {

namespace {

const Integer& zero_integer()
{
    static const Integer zero{0};
    return zero;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c)
{
    return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t exponent)
{
    std::vector<Integer> v(exponent + 1);
    v[exponent] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_q_pow(std::size_t k)
{
    if (k == 0) return {};
    std::vector<Integer> v(k + 1);
    v[0] = 1;
    v[k] = -1;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::degree() const noexcept
{
    return coeffs_.empty() ? kZeroDegree : static_cast<std::int64_t>(coeffs_.size()) - 1;
}

const Integer& IntPolynomial::operator[](std::size_t i) const noexcept
{
    return i < coeffs_.size() ? coeffs_[i] : zero_integer();
}

Integer IntPolynomial::eval_at_one() const
{
    Integer sum = 0;
    for (const auto& c : coeffs_) sum += c;
    return sum;
}

IntPolynomial IntPolynomial::substitute_power(std::size_t k) const
{
    if (k == 0) throw std::domain_error("substitute_power: k must be positive");
    if (coeffs_.empty()) return {};
    std::vector<Integer> v((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return IntPolynomial(std::move(v));
}

void IntPolynomial::mul_one_minus_qk(std::size_t k)
{
    if (coeffs_.empty()) return;
    if (k == 0) {
        coeffs_.clear();
        return;
    }
    const std::size_t old_size = coeffs_.size();
    coeffs_.resize(old_size + k);
    for (std::size_t i = coeffs_.size(); i-- > k;) coeffs_[i] -= coeffs_[i - k];
}

void IntPolynomial::mul_one_plus_qk(std::size_t k)
{
    if (coeffs_.empty()) return;
    if (k == 0) {
        for (auto& c : coeffs_) c *= 2;
        return;
    }
    const std::size_t old_size = coeffs_.size();
    coeffs_.resize(old_size + k);
    for (std::size_t i = coeffs_.size(); i-- > k;) coeffs_[i] += coeffs_[i - k];
}

bool IntPolynomial::div_one_minus_qk(std::size_t k)
{
    if (k == 0) throw std::domain_error("div_one_minus_qk: k must be positive");
    if (coeffs_.empty()) return true;
    const std::size_t n = coeffs_.size();
    if (n <= k) return false;
    for (std::size_t i = k; i < n; ++i) coeffs_[i] += coeffs_[i - k];
    // The quotient has degree n-1-k, so the last k recovered terms must vanish.
    bool exact = std::all_of(coeffs_.begin() + static_cast<std::ptrdiff_t>(n - k), coeffs_.end(),
                             [](const Integer& c) { return sgn(c) == 0; });
    if (!exact) {
        for (std::size_t i = n; i-- > k;) coeffs_[i] -= coeffs_[i - k];
        return false;
    }
    coeffs_.resize(n - k);
    trim();
    return true;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    // schoolbook; skip zero rows since the inputs here are often sparse-ish
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        const Integer& a = lhs.coeffs_[i];
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (sgn(c) == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'q';
        if (i > 1) os << '^' << i;
    }
    return os.str();
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b)
{
    return a + b;
}

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b)
{
    return a * b;
}

std::optional<IntPolynomial> poly_div_exact(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero()) throw std::domain_error("poly_div_exact: division by the zero polynomial");
    if (a.is_zero()) return IntPolynomial{};
    const auto da = static_cast<std::size_t>(a.degree());
    const auto db = static_cast<std::size_t>(b.degree());
    if (da < db) return std::nullopt;

    std::vector<Integer> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Integer> quot(da - db + 1);
    const Integer& lead = b[db];
    Integer t;
    for (std::size_t i = da + 1; i-- > db;) {
        if (sgn(rem[i]) == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        mpz_divexact(t.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        quot[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_submul(rem[i - db + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
        }
    }
    for (std::size_t i = 0; i < db; ++i) {
        if (sgn(rem[i]) != 0) return std::nullopt;
    }
    return IntPolynomial(std::move(quot));
}

std::optional<IntPolynomial> div_one_minus_qk(const IntPolynomial& a, std::size_t k)
{
    if (k == 0) throw std::domain_error("div_one_minus_qk: k must be positive");
    IntPolynomial c = a;
    if (!c.div_one_minus_qk(k)) return std::nullopt;
    return c;
}

IntPolynomial q_int(std::int64_t m)
{
    if (m < 1) throw std::domain_error("q_int: argument must be positive");
    return IntPolynomial(std::vector<Integer>(static_cast<std::size_t>(m), Integer{1}));
}

IntPolynomial q_binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0 || k < 0 || k > n) return {};
    k = std::min(k, n - k);
    IntPolynomial result = IntPolynomial::constant(1);
    // After step i the running value is [n-k+i choose i]_q, always a polynomial.
    for (std::int64_t i = 1; i <= k; ++i) {
        result.mul_one_minus_qk(static_cast<std::size_t>(n - k + i));
        if (!result.div_one_minus_qk(static_cast<std::size_t>(i))) {
            throw std::logic_error("q_binomial: intermediate quotient not exact");
        }
    }
    return result;
}

const IntPolynomial& CyclotomicCache::get(std::int64_t d)
{
    if (d < 1) throw std::domain_error("cyclotomic: index must be positive");
    {
        std::shared_lock lock(mutex_);
        if (auto it = table_.find(d); it != table_.end()) return *it->second;
    }

    // q^d - 1, then strip every C_e with e a proper divisor of d.
    std::vector<Integer> v(static_cast<std::size_t>(d) + 1);
    v[0] = -1;
    v[static_cast<std::size_t>(d)] = 1;
    IntPolynomial value(std::move(v));
    for (std::int64_t e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto q = poly_div_exact(value, get(e));
        if (!q) throw std::logic_error("cyclotomic: divisor polynomial does not divide q^d - 1");
        value = std::move(*q);
    }

    std::unique_lock lock(mutex_);
    auto [it, inserted] = table_.try_emplace(d, std::make_unique<const IntPolynomial>(std::move(value)));
    return *it->second;
}

std::size_t CyclotomicCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

const IntPolynomial& cyclotomic(std::int64_t d, CyclotomicCache& cache)
{
    return cache.get(d);
}

CyclotomicCache& default_cyclotomic_cache()
{
    static CyclotomicCache cache;
    return cache;
}

}  // namespace qquot
