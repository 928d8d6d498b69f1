#include "qpos/theta.hpp"

#include "qpos/errors.hpp"

namespace qpos {

ThetaForm::ThetaForm(const Rational& A, const Rational& B) : A_(A), B_(B)
{
    if (!(A_ > B_) || B_ < 0) {
        throw DomainError("theta form needs A > B >= 0, got A=" + to_string(A_) + " B=" + to_string(B_));
    }
    const Rational twice_a = 2 * A_;
    const Rational a_plus_b = A_ + B_;
    if (!is_integer(twice_a) || !is_integer(a_plus_b)) {
        throw DomainError("A x^2 + B x is not integer valued for A=" + to_string(A_) +
                          " B=" + to_string(B_));
    }
    twice_a_ = to_int64(twice_a.get_num());
    twice_b_ = to_int64(Rational(2 * B_).get_num());
}

std::int64_t ThetaForm::exponent(std::int64_t j) const
{
    // 2A j^2 + 2B j = 2A j(j+1) - 2A j + 2B j, and 2A j(j+1) is even.
    const std::int64_t twice = twice_a_ * j * j + twice_b_ * j;
    if (twice % 2 != 0) {
        throw ConsistencyError("odd value of 2(Aj^2+Bj)");
    }
    return twice / 2;
}

namespace {

// Adds (-1)^(j + shift) q^{e(j)} for j >= from, ascending, while e(j) <= T.
// e is increasing on j >= 0 and on j <= -1 (as |j| grows) because A > B >= 0.
void add_ascending(IntegerSeries& s, const ThetaForm& form, std::int64_t from, std::int64_t shift)
{
    const auto T = static_cast<std::int64_t>(s.order());
    for (std::int64_t j = from;; ++j) {
        const std::int64_t e = form.exponent(j);
        if (e > T) {
            if (j >= 0) {
                return;
            }
            continue;
        }
        s.add_term(e, parity_sign(j + shift));
    }
}

void add_descending(IntegerSeries& s, const ThetaForm& form, std::int64_t from, std::int64_t shift)
{
    const auto T = static_cast<std::int64_t>(s.order());
    for (std::int64_t j = from;; --j) {
        const std::int64_t e = form.exponent(j);
        if (e > T) {
            if (j <= 0) {
                return;
            }
            continue;
        }
        s.add_term(e, parity_sign(j + shift));
    }
}

} // namespace

IntegerSeries theta_full(const ThetaForm& form, std::size_t T)
{
    IntegerSeries s(T);
    add_ascending(s, form, 0, 0);
    add_descending(s, form, -1, 0);
    return s;
}

IntegerSeries theta_partial(const ThetaForm& form, std::int64_t lo, std::int64_t hi, std::size_t T)
{
    IntegerSeries s(T);
    const auto limit = static_cast<std::int64_t>(T);
    for (std::int64_t j = lo; j <= hi; ++j) {
        const std::int64_t e = form.exponent(j);
        if (e <= limit) {
            s.add_term(e, parity_sign(j));
        }
    }
    return s;
}

IntegerSeries theta_outside(const ThetaForm& form, std::int64_t lo, std::int64_t hi, std::size_t T)
{
    if (lo > hi) {
        throw DomainError("theta_outside: empty excluded range");
    }
    IntegerSeries s(T);
    add_ascending(s, form, hi + 1, 0);
    add_descending(s, form, lo - 1, 0);
    return s;
}

IntegerSeries theta_tail(const ThetaForm& form, std::int64_t k, std::size_t T)
{
    if (k < 1) {
        throw DomainError("theta_tail requires k >= 1");
    }
    IntegerSeries s(T);
    add_ascending(s, form, k, k);
    add_descending(s, form, -k - 1, k);
    return s;
}

} // namespace qpos
