#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qpos/series.hpp"

namespace qpos {

/// n together with nu_2(n) and N_n = n (1 + nu_2(n) / 2).
struct MercaExponent {
    std::int64_t n = 0;
    int nu2 = 0;
    std::int64_t N = 0;
};

MercaExponent merca_N(std::int64_t n);

/// N_{2n} for n = 1, 2, ... while N_{2n} <= T (N_{2n} >= 2n, so the list is finite).
std::vector<std::int64_t> merca_exponents(std::size_t T);

/// prod_{n >= 1} (1 - q^{N_{2n}}) truncated at T.
IntegerSeries merca_product(std::size_t T);

struct ProductFactorResult {
    IntegerSeries P;
    bool nonnegative = false;
    std::optional<std::size_t> first_negative;
};

/// P(q) = merca_product / (q;q)_inf * (1-q)(1-q^4)(1-q^5); the lemma asserts P >= 0.
ProductFactorResult check_product_factor(std::size_t T);

/// (1/(1-q)) sum_{j not in [-k, k]} (-1)^{j+k-1} q^{j(3j+1)/2}.
IntegerSeries gamma_prime_series(std::int64_t k, std::size_t T);

/// The value the five-interval pattern predicts for gamma'(n) (0, 1 or 2).
int gamma_prime_pattern(std::int64_t k, std::int64_t n);

struct MercaCertificate {
    int which = 1;
    std::int64_t k = 0;
    std::size_t T = 0;
    Integer min_coeff;
    std::size_t min_at = 0;
    bool nonnegative = false;
    std::size_t route_T = 0;
    bool routes_equal = false;
    std::optional<std::size_t> route_mismatch;
    bool pass = false;
};

/// Shared expansions for a fixed order, so sweeps over k do not recompute them.
class MercaContext {
public:
    explicit MercaContext(std::size_t T);

    std::size_t order() const noexcept { return T_; }
    const IntegerSeries& product() const noexcept { return product_; }
    /// merca_product / (q;q)_inf
    const IntegerSeries& quotient() const noexcept { return quotient_; }
    const IntegerSeries& P() const noexcept { return P_; }

    /// The conjecture exactly as displayed (finite sum inside the bracket).
    IntegerSeries display_form(int which, std::int64_t k) const;

    /// P(q) times a nonnegative quotient: gamma^k_{1,4,5,3/2,1/2} for the
    /// first display, gamma' / ((1-q^4)(1-q^5)) for the second.
    IntegerSeries tail_form(int which, std::int64_t k) const;

private:
    std::size_t T_;
    IntegerSeries product_;
    IntegerSeries quotient_;
    IntegerSeries P_;
};

/// Nonnegativity of the display to order T, plus coefficientwise equality
/// of the display and tail routes to order route_T (<= T).
MercaCertificate check_merca_conjecture(int which, std::int64_t k, std::size_t T, std::size_t route_T = 500);
MercaCertificate check_merca_conjecture(const MercaContext& ctx, const MercaContext& route_ctx, int which,
                                        std::int64_t k);

} // namespace qpos
