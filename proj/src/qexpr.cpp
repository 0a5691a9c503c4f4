#include "qquot/qexpr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qquot {

namespace {

// Dense exponent accumulator over q-integer arguments 1..max.
class ExponentTally {
public:
    void add(std::int64_t arg, std::int64_t exp)
    {
        if (arg < 1) throw std::domain_error("q-integer argument must be positive");
        const auto i = static_cast<std::size_t>(arg);
        if (i >= exps_.size()) exps_.resize(i + 1, 0);
        exps_[i] += exp;
    }

    // [1]_q! .. [arg]_q! contribute [1]..[arg] once each
    void add_factorial(std::int64_t arg, std::int64_t power)
    {
        if (arg < 0) throw std::domain_error("factorial argument must be nonnegative");
        for (std::int64_t m = 2; m <= arg; ++m) add(m, power);
    }

    FactoredQExpression build() const
    {
        std::vector<QFactor> out;
        for (std::size_t m = 2; m < exps_.size(); ++m) {
            if (exps_[m] != 0) out.push_back({static_cast<std::int64_t>(m), exps_[m]});
        }
        return FactoredQExpression::from_factors(out);
    }

private:
    std::vector<std::int64_t> exps_;
};

}  // namespace

FactoredQExpression FactoredQExpression::from_factors(std::span<const QFactor> factors)
{
    std::vector<QFactor> sorted(factors.begin(), factors.end());
    for (const auto& f : sorted) {
        if (f.arg < 1) throw std::domain_error("q-integer argument must be positive");
    }
    std::sort(sorted.begin(), sorted.end(), [](const QFactor& a, const QFactor& b) { return a.arg < b.arg; });

    FactoredQExpression expr;
    for (const auto& f : sorted) {
        if (f.arg == 1) continue;
        if (!expr.factors_.empty() && expr.factors_.back().arg == f.arg) {
            expr.factors_.back().exp += f.exp;
        } else {
            expr.factors_.push_back(f);
        }
    }
    std::erase_if(expr.factors_, [](const QFactor& f) { return f.exp == 0; });
    return expr;
}

FactoredQExpression FactoredQExpression::q_integer(std::int64_t m, std::int64_t exp)
{
    const QFactor f{m, exp};
    return from_factors(std::span<const QFactor>(&f, 1));
}

std::int64_t FactoredQExpression::max_arg() const noexcept
{
    return factors_.empty() ? 1 : factors_.back().arg;
}

FactoredQExpression FactoredQExpression::inverse() const
{
    FactoredQExpression out = *this;
    for (auto& f : out.factors_) f.exp = -f.exp;
    return out;
}

FactoredQExpression operator*(const FactoredQExpression& a, const FactoredQExpression& b)
{
    std::vector<QFactor> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return FactoredQExpression::from_factors(all);
}

std::string FactoredQExpression::to_string() const
{
    auto render = [](std::ostringstream& os, const std::vector<QFactor>& side) {
        for (const auto& f : side) {
            os << '[' << f.arg << ']';
            if (f.exp > 1) os << '^' << f.exp;
        }
    };
    std::vector<QFactor> num;
    std::vector<QFactor> den;
    for (const auto& f : factors_) {
        if (f.exp > 0) {
            num.push_back(f);
        } else {
            den.push_back({f.arg, -f.exp});
        }
    }
    std::ostringstream os;
    if (num.empty()) {
        os << '1';
    } else {
        render(os, num);
    }
    if (!den.empty()) {
        os << " / ";
        const bool group = den.size() > 1 || den.front().exp > 1;
        if (group) os << '(';
        render(os, den);
        if (group) os << ')';
    }
    return os.str();
}

bool FakeGaussianSpec::symmetric() const noexcept
{
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(a.size() / 2), a.rbegin());
}

FactoredQExpression factorial_quotient(std::span<const FactorialPower> numerator,
                                       std::span<const FactorialPower> denominator)
{
    ExponentTally tally;
    for (const auto& f : numerator) tally.add_factorial(f.arg, f.power);
    for (const auto& f : denominator) tally.add_factorial(f.arg, -f.power);
    return tally.build();
}

FactoredQExpression from_quotient_spec(const QuotientSpec& spec)
{
    const auto [n, k, l] = spec;
    if (n < 0 || k < 0 || l < 0 || k > n || l > n) {
        throw std::domain_error("quotient spec requires 0 <= k, l <= n");
    }
    // [l]! [n-l]! / ([k]! [n-k]!) with the common prefixes cancelled directly
    ExponentTally tally;
    auto add_range = [&](std::int64_t lo, std::int64_t hi, std::int64_t e) {
        for (std::int64_t m = std::max<std::int64_t>(lo, 2); m <= hi; ++m) tally.add(m, e);
    };
    auto ratio = [&](std::int64_t top, std::int64_t bottom) {  // [top]! / [bottom]!
        if (top > bottom) {
            add_range(bottom + 1, top, 1);
        } else {
            add_range(top + 1, bottom, -1);
        }
    };
    ratio(l, k);
    ratio(n - l, n - k);
    return tally.build();
}

FactoredQExpression from_fake_gaussian(const FakeGaussianSpec& spec)
{
    if (spec.m < 1) throw std::domain_error("fake Gaussian spec requires m >= 1");
    ExponentTally tally;
    for (std::size_t idx = 0; idx < spec.a.size(); ++idx) {
        const std::int64_t ai = spec.a[idx];
        if (ai < 0) throw std::domain_error("fake Gaussian exponents must be nonnegative");
        if (ai == 0) continue;
        const auto i = static_cast<std::int64_t>(idx) + 1;
        tally.add(spec.m + i, ai);
        tally.add(i, -ai);
    }
    return tally.build();
}

QuotientSpec normalize(const QuotientSpec& spec)
{
    return {spec.n, std::min(spec.k, spec.n - spec.k), std::min(spec.l, spec.n - spec.l)};
}

std::vector<std::int64_t> divisors(std::int64_t m)
{
    if (m < 1) throw std::domain_error("divisors: argument must be positive");
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d * d <= m; ++d) {
        if (m % d != 0) continue;
        small.push_back(d);
        if (d != m / d) large.push_back(m / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t cyclotomic_exponent(const FactoredQExpression& expr, std::int64_t d)
{
    if (d < 2) throw std::domain_error("cyclotomic_exponent: d must be at least 2");
    std::int64_t total = 0;
    for (const auto& f : expr.factors()) {
        if (f.arg % d == 0) total += f.exp;
    }
    return total;
}

std::vector<std::int64_t> cyclotomic_exponents(const FactoredQExpression& expr)
{
    std::vector<std::int64_t> ex(static_cast<std::size_t>(expr.max_arg()) + 1, 0);
    for (const auto& f : expr.factors()) {
        for (std::int64_t d = 1; d * d <= f.arg; ++d) {
            if (f.arg % d != 0) continue;
            ex[static_cast<std::size_t>(d)] += f.exp;
            if (d != f.arg / d) ex[static_cast<std::size_t>(f.arg / d)] += f.exp;
        }
    }
    ex[1] = 0;
    ex[0] = 0;
    return ex;
}

bool is_polynomial(const FactoredQExpression& expr)
{
    const auto ex = cyclotomic_exponents(expr);
    return std::all_of(ex.begin(), ex.end(), [](std::int64_t e) { return e >= 0; });
}

std::int64_t net_degree(const FactoredQExpression& expr)
{
    std::int64_t deg = 0;
    for (const auto& f : expr.factors()) deg += f.exp * (f.arg - 1);
    return deg;
}

std::optional<IntPolynomial> expand(const FactoredQExpression& expr)
{
    // Rewrite as prod (1 - q^m)^{c_m}, where the (1 - q) power absorbs the
    // q-integer denominators: [m] = (1 - q^m) / (1 - q).
    std::vector<std::int64_t> numer;
    std::vector<std::int64_t> denom;
    std::int64_t one_minus_q = 0;
    for (const auto& f : expr.factors()) {
        one_minus_q -= f.exp;
        auto& side = f.exp > 0 ? numer : denom;
        for (std::int64_t r = 0; r < (f.exp > 0 ? f.exp : -f.exp); ++r) side.push_back(f.arg);
    }
    if (one_minus_q > 0) numer.insert(numer.begin(), static_cast<std::size_t>(one_minus_q), 1);
    if (one_minus_q < 0) denom.insert(denom.begin(), static_cast<std::size_t>(-one_minus_q), 1);

    // Cyclotomic content of the running product, used only to schedule each
    // division as early as possible; every division is still verified.
    std::vector<std::int64_t> avail(static_cast<std::size_t>(expr.max_arg()) + 1, 0);
    std::vector<std::vector<std::int64_t>> den_divisors;
    den_divisors.reserve(denom.size());
    for (std::int64_t t : denom) den_divisors.push_back(divisors(t));
    std::vector<bool> done(denom.size(), false);

    IntPolynomial p = IntPolynomial::constant(1);
    auto try_scheduled = [&]() -> bool {
        for (std::size_t j = 0; j < denom.size(); ++j) {
            if (done[j]) continue;
            const auto& divs = den_divisors[j];
            const bool ready = std::all_of(divs.begin(), divs.end(), [&](std::int64_t d) {
                return avail[static_cast<std::size_t>(d)] > 0;
            });
            if (!ready) continue;
            if (!p.div_one_minus_qk(static_cast<std::size_t>(denom[j]))) return false;
            for (std::int64_t d : divs) --avail[static_cast<std::size_t>(d)];
            done[j] = true;
        }
        return true;
    };

    for (std::int64_t m : numer) {
        p.mul_one_minus_qk(static_cast<std::size_t>(m));
        for (std::int64_t d : divisors(m)) ++avail[static_cast<std::size_t>(d)];
        if (!try_scheduled()) return std::nullopt;
    }
    // Whatever is left is attempted directly; a failure here is the genuine
    // non-divisibility verdict.
    for (std::size_t j = 0; j < denom.size(); ++j) {
        if (done[j]) continue;
        if (!p.div_one_minus_qk(static_cast<std::size_t>(denom[j]))) return std::nullopt;
    }
    return p;
}

std::optional<IntPolynomial> expand_via_cyclotomics(const FactoredQExpression& expr, CyclotomicCache& cache)
{
    const auto ex = cyclotomic_exponents(expr);
    IntPolynomial p = IntPolynomial::constant(1);
    for (std::size_t d = 2; d < ex.size(); ++d) {
        if (ex[d] < 0) return std::nullopt;
        for (std::int64_t r = 0; r < ex[d]; ++r) p = p * cache.get(static_cast<std::int64_t>(d));
    }
    return p;
}

}  // namespace qquot
