#pragma once

// Coefficient-level properties of expanded polynomials.

#include "qquot/qpoly.hpp"

#include <cstdint>
#include <optional>

namespace qquot {

struct CoefficientLocus {
    std::int64_t exponent = 0;
    Integer coefficient;

    friend bool operator==(const CoefficientLocus&, const CoefficientLocus&) = default;
};

struct Nonnegativity {
    bool nonnegative = true;
    std::optional<CoefficientLocus> first_negative;
};

struct PropertyRecord {
    bool nonnegative = true;
    std::optional<CoefficientLocus> first_negative;
    bool reciprocal = true;
    bool unimodal = true;
    bool parity_unimodal = true;
    std::int64_t order = 0;
    std::int64_t degree = 0;
};

/// Smallest exponent carrying a negative coefficient, if any.
Nonnegativity nonnegativity(const IntPolynomial& p);

/// Palindromic coefficients over 0..degree. Throws std::domain_error on zero.
bool is_reciprocal(const IntPolynomial& p);

/// Weakly increasing then weakly decreasing. Zero and constants are unimodal.
bool is_unimodal(const IntPolynomial& p);

/// Even-index and odd-index subsequences are each unimodal.
bool is_parity_unimodal(const IntPolynomial& p);

/// Least exponent with a nonzero coefficient. Throws std::domain_error on zero.
std::int64_t order_of(const IntPolynomial& p);

/// All of the above. Throws std::domain_error on zero.
PropertyRecord properties_of(const IntPolynomial& p);

}  // namespace qquot
