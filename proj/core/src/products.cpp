#include "qpos/products.hpp"

#include <algorithm>

#include "qpos/errors.hpp"
#include "qpos/theta.hpp"

namespace qpos {

IntegerSeries product_from_exponents(std::span<const std::int64_t> exponents, std::size_t T)
{
    IntegerSeries s = IntegerSeries::one(T);
    for (std::int64_t e : exponents) {
        if (e <= 0) {
            throw DomainError("product exponent must be positive, got " + std::to_string(e));
        }
        s.mul_binomial(e, -1);
    }
    return s;
}

IntegerSeries euler_product(std::size_t T)
{
    return pochhammer(1, 1, std::nullopt, -1, T);
}

IntegerSeries partition_series(std::size_t T)
{
    // (q;q)_inf has O(sqrt T) nonzero terms, so sparse inversion is cheap.
    return series_invert(theta_full(ThetaForm(make_rational(3, 2), make_rational(1, 2)), T));
}

namespace {

void check_pochhammer_args(std::int64_t first, std::int64_t step, std::optional<std::int64_t> count)
{
    if (first < 0 || step < 0) {
        throw DomainError("pochhammer exponents must be nonnegative");
    }
    if (!count && step == 0) {
        throw DomainError("infinite pochhammer product needs a positive step");
    }
    if (count && *count < 0) {
        throw DomainError("pochhammer length must be nonnegative");
    }
}

template <typename Fn>
void for_each_factor(std::int64_t first, std::int64_t step, std::optional<std::int64_t> count,
                     std::size_t T, Fn fn)
{
    const auto limit = static_cast<std::int64_t>(T);
    for (std::int64_t i = 0; !count || i < *count; ++i) {
        const std::int64_t e = first + i * step;
        if (e > limit) {
            if (step > 0) {
                return;
            }
            continue;
        }
        fn(e);
    }
}

} // namespace

IntegerSeries pochhammer(std::int64_t first, std::int64_t step, std::optional<std::int64_t> count,
                         int sign, std::size_t T)
{
    check_pochhammer_args(first, step, count);
    IntegerSeries s = IntegerSeries::one(T);
    for_each_factor(first, step, count, T, [&](std::int64_t e) { s.mul_binomial(e, sign); });
    return s;
}

void divide_pochhammer(IntegerSeries& s, std::int64_t first, std::int64_t step,
                       std::optional<std::int64_t> count, int sign)
{
    check_pochhammer_args(first, step, count);
    for_each_factor(first, step, count, s.order(), [&](std::int64_t e) { s.div_binomial(e, sign); });
}

IntegerSeries q_binomial(std::int64_t n, std::int64_t k, std::size_t T, std::int64_t base)
{
    if (base < 1) {
        throw DomainError("q_binomial base must be >= 1");
    }
    if (n < 0 || k < 0 || k > n) {
        return IntegerSeries(T);
    }
    k = std::min(k, n - k);
    // prod_{i=1}^{k} (1 - q^{base(n-k+i)}) / (1 - q^{base i}); every step is a
    // polynomial, and both operations commute with truncation.
    IntegerSeries s = IntegerSeries::one(T);
    for (std::int64_t i = 1; i <= k; ++i) {
        s.mul_binomial(base * (n - k + i), -1);
        s.div_binomial(base * i, -1);
    }
    return s;
}

} // namespace qpos
