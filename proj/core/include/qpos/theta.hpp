#pragma once

#include <cstddef>
#include <cstdint>

#include "qpos/rational.hpp"
#include "qpos/series.hpp"

namespace qpos {

/// The exponent polynomial A x^2 + B x with A > B >= 0, integer-valued on
/// the integers (2A and A+B integral, checked at construction).
class ThetaForm {
public:
    ThetaForm(const Rational& A, const Rational& B);

    const Rational& A() const noexcept { return A_; }
    const Rational& B() const noexcept { return B_; }

    /// A j^2 + B j, exact.
    std::int64_t exponent(std::int64_t j) const;

    /// f(j) = A j^2 + B j and g(j) = A j^2 - B j.
    std::int64_t f(std::int64_t j) const { return exponent(j); }
    std::int64_t g(std::int64_t j) const { return exponent(-j); }

    friend bool operator==(const ThetaForm& x, const ThetaForm& y)
    {
        return x.A_ == y.A_ && x.B_ == y.B_;
    }

private:
    Rational A_;
    Rational B_;
    std::int64_t twice_a_ = 0;
    std::int64_t twice_b_ = 0;
};

/// (-1)^n for any integer n, including negative n.
inline int parity_sign(std::int64_t n)
{
    return (n % 2 == 0) ? 1 : -1;
}

/// sum_{j in Z} (-1)^j q^{A j^2 + B j}, truncated at T.
IntegerSeries theta_full(const ThetaForm& form, std::size_t T);

/// sum_{j = lo}^{hi} (-1)^j q^{A j^2 + B j}.
IntegerSeries theta_partial(const ThetaForm& form, std::int64_t lo, std::int64_t hi, std::size_t T);

/// sum_{j < lo or j > hi} (-1)^j q^{A j^2 + B j}.
IntegerSeries theta_outside(const ThetaForm& form, std::int64_t lo, std::int64_t hi, std::size_t T);

/// sum_{j not in [-k, k-1]} (-1)^{j+k} q^{A j^2 + B j}. Requires k >= 1.
IntegerSeries theta_tail(const ThetaForm& form, std::int64_t k, std::size_t T);

} // namespace qpos
