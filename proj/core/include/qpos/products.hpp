#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "qpos/series.hpp"

namespace qpos {

/// prod_e (1 - q^e) over the given exponents, truncated at T. Exponents
/// above T contribute the factor 1; nonpositive exponents throw DomainError.
IntegerSeries product_from_exponents(std::span<const std::int64_t> exponents, std::size_t T);

/// (q;q)_inf truncated at T.
IntegerSeries euler_product(std::size_t T);

/// 1/(q;q)_inf: the partition numbers p(0..T).
IntegerSeries partition_series(std::size_t T);

/// prod_{i=0}^{count-1} (1 + sign q^{first + i*step}); count = nullopt means
/// the infinite product. first = 0 contributes the constant (1 + sign).
/// (-q;q)_n is pochhammer(1, 1, n, +1), (q^2;q^2)_inf is pochhammer(2, 2, {}, -1).
IntegerSeries pochhammer(std::int64_t first, std::int64_t step, std::optional<std::int64_t> count,
                         int sign, std::size_t T);

/// In-place division by the same product (requires every exponent >= 1).
void divide_pochhammer(IntegerSeries& s, std::int64_t first, std::int64_t step,
                       std::optional<std::int64_t> count, int sign);

/// Gaussian binomial [n choose k] in the variable q^base, truncated at T.
/// Zero when k < 0 or k > n.
IntegerSeries q_binomial(std::int64_t n, std::int64_t k, std::size_t T, std::int64_t base = 1);

} // namespace qpos
