#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpos/rational.hpp"

namespace qpos {

/// Dense formal power series truncated at an inclusive order T, i.e. the
/// coefficients of q^0 .. q^T. Coefficients are arbitrary precision.
///
/// Arithmetic between series of different orders throws OrderMismatchError;
/// nothing is ever re-truncated implicitly.
class IntegerSeries {
public:
    explicit IntegerSeries(std::size_t order);

    /// The constant series 1.
    static IntegerSeries one(std::size_t order);

    /// coeff * q^exponent, or the zero series when exponent > order.
    static IntegerSeries monomial(std::size_t order, std::int64_t exponent, const Integer& coeff = 1);

    static IntegerSeries from_coeffs(std::size_t order, std::span<const std::int64_t> coeffs);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const Integer& operator[](std::size_t n) const { return coeffs_[n]; }
    Integer& operator[](std::size_t n) { return coeffs_[n]; }

    /// Coefficient of q^n, zero for negative n or n beyond the order.
    Integer coeff(std::int64_t n) const;

    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    IntegerSeries& operator+=(const IntegerSeries& other);
    IntegerSeries& operator-=(const IntegerSeries& other);
    IntegerSeries& operator*=(const Integer& factor);
    IntegerSeries& operator*=(const IntegerSeries& other);
    IntegerSeries operator-() const;

    /// Adds coeff * q^exponent in place (no-op beyond the order).
    IntegerSeries& add_term(std::int64_t exponent, const Integer& coeff);

    /// In-place multiplication by (1 + sign q^m), sign = +1 or -1.
    IntegerSeries& mul_binomial(std::int64_t m, int sign);

    /// In-place division by (1 + sign q^m): the prefix recurrence
    /// c[n] -= sign * c[n - m]. m = 0 is rejected.
    IntegerSeries& div_binomial(std::int64_t m, int sign);

    /// Multiplication by q^e, dropping terms beyond the order.
    IntegerSeries shifted(std::int64_t e) const;

    bool is_zero() const;

    friend bool operator==(const IntegerSeries&, const IntegerSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

IntegerSeries operator+(IntegerSeries lhs, const IntegerSeries& rhs);
IntegerSeries operator-(IntegerSeries lhs, const IntegerSeries& rhs);
IntegerSeries operator*(IntegerSeries lhs, const Integer& rhs);

/// Cauchy product truncated to the common order. Zero coefficients of either
/// operand are skipped, so sparse factors cost O(nnz * T).
IntegerSeries series_mul(const IntegerSeries& s, const IntegerSeries& t);
IntegerSeries operator*(const IntegerSeries& s, const IntegerSeries& t);

/// Multiplicative inverse to the same order. Requires s[0] = +-1.
IntegerSeries series_invert(const IntegerSeries& s);

/// Index of the first differing coefficient, if any. Orders must match.
std::optional<std::size_t> first_mismatch(const IntegerSeries& a, const IntegerSeries& b);

struct MinCoefficient {
    Integer value;
    std::size_t at = 0;
};

/// Smallest coefficient over [from, order] (first occurrence on ties).
MinCoefficient min_coefficient(const IntegerSeries& s, std::size_t from = 0);

/// Stable 64-bit FNV-1a digest of the decimal coefficient list, as hex.
std::string digest(const IntegerSeries& s);

/// Human-readable form like "1 - q - q^2 + q^5"; terms beyond max_terms are elided.
std::string to_string(const IntegerSeries& s, std::size_t max_terms = 32);

} // namespace qpos
