#include "qquot/analysis.hpp"

#include <stdexcept>

namespace qquot {

namespace {

// Unimodality over the subsequence c[start], c[start + step], ...
// The definition also asks for nonnegative entries.
bool unimodal_stride(std::span<const Integer> c, std::size_t start, std::size_t step)
{
    bool descending = false;
    const Integer* prev = nullptr;
    for (std::size_t i = start; i < c.size(); i += step) {
        if (sgn(c[i]) < 0) return false;
        if (prev != nullptr) {
            const int cmp = ::cmp(c[i], *prev);
            if (cmp > 0 && descending) return false;
            if (cmp < 0) descending = true;
        }
        prev = &c[i];
    }
    return true;
}

}  // namespace

Nonnegativity nonnegativity(const IntPolynomial& p)
{
    const auto c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) < 0) return {false, CoefficientLocus{static_cast<std::int64_t>(i), c[i]}};
    }
    return {};
}

bool is_reciprocal(const IntPolynomial& p)
{
    if (p.is_zero()) throw std::domain_error("is_reciprocal: zero polynomial");
    const auto c = p.coeffs();
    for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j) {
        if (c[i] != c[j]) return false;
    }
    return true;
}

bool is_unimodal(const IntPolynomial& p)
{
    return unimodal_stride(p.coeffs(), 0, 1);
}

bool is_parity_unimodal(const IntPolynomial& p)
{
    return unimodal_stride(p.coeffs(), 0, 2) && unimodal_stride(p.coeffs(), 1, 2);
}

std::int64_t order_of(const IntPolynomial& p)
{
    if (p.is_zero()) throw std::domain_error("order_of: zero polynomial");
    const auto c = p.coeffs();
    std::size_t i = 0;
    while (sgn(c[i]) == 0) ++i;
    return static_cast<std::int64_t>(i);
}

PropertyRecord properties_of(const IntPolynomial& p)
{
    PropertyRecord rec;
    auto nn = nonnegativity(p);
    rec.nonnegative = nn.nonnegative;
    rec.first_negative = std::move(nn.first_negative);
    rec.reciprocal = is_reciprocal(p);
    rec.unimodal = is_unimodal(p);
    rec.parity_unimodal = is_parity_unimodal(p);
    rec.order = order_of(p);
    rec.degree = p.degree();
    return rec;
}

}  // namespace qquot
