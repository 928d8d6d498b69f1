#include "qpos/periodic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qpos/errors.hpp"

namespace qpos {

namespace {

void require_pairwise_coprime(std::span<const std::int64_t> parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            throw DomainError("parts must be positive, got " + std::to_string(parts[i]));
        }
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (parts[i] == parts[j]) {
                throw DomainError("parts must be distinct, " + std::to_string(parts[i]) + " repeats");
            }
            if (std::gcd(parts[i], parts[j]) != 1) {
                throw DomainError("parts " + std::to_string(parts[i]) + " and " +
                                  std::to_string(parts[j]) + " are not coprime");
            }
        }
    }
}

IntegerSeries inverse_of_parts(std::span<const std::int64_t> parts, std::size_t T)
{
    IntegerSeries s = IntegerSeries::one(T);
    for (std::int64_t p : parts) {
        s.div_binomial(p, -1);
    }
    return s;
}

} // namespace

CoprimeTriple::CoprimeTriple(std::int64_t x, std::int64_t y, std::int64_t z) : parts_{x, y, z}
{
    std::sort(parts_.begin(), parts_.end());
    require_pairwise_coprime(parts_);
}

IntegerSeries alpha_series(const CoprimeTriple& triple, std::size_t T)
{
    return inverse_of_parts(triple.parts(), T);
}

Rational F_value(const CoprimeTriple& triple, const Rational& n)
{
    Rational r = (n * n + triple.sum() * n) / Rational(2 * triple.product());
    r.canonicalize();
    return r;
}

Rational F_value(const CoprimeTriple& triple, std::int64_t n)
{
    return F_value(triple, make_rational(n));
}

PeriodicDecomposition decompose(const CoprimeTriple& triple)
{
    const std::int64_t period = triple.product();
    const auto window = static_cast<std::size_t>(2 * period);
    const IntegerSeries alpha = alpha_series(triple, window - 1);

    std::vector<Rational> beta(window);
    for (std::size_t n = 0; n < window; ++n) {
        beta[n] = Rational(alpha[n]) - F_value(triple, static_cast<std::int64_t>(n));
    }

    const auto p = static_cast<std::size_t>(period);
    Rational D = 0;
    for (std::size_t n = 0; n < p; ++n) {
        if (beta[n] != beta[n + p]) {
            throw ConsistencyError("beta(n) not periodic with period abc at n=" + std::to_string(n));
        }
        D = std::max(D, Rational(abs(beta[n])));
    }
    if (D <= 0) {
        throw ConsistencyError("D must be positive");
    }
    beta.resize(p);
    return PeriodicDecomposition{triple, period, std::move(beta), D};
}

CoprimeTuple45::CoprimeTuple45(std::vector<std::int64_t> parts) : parts_(std::move(parts))
{
    if (parts_.size() != 4 && parts_.size() != 5) {
        throw DomainError("expected 4 or 5 parts, got " + std::to_string(parts_.size()));
    }
    std::sort(parts_.begin(), parts_.end());
    require_pairwise_coprime(parts_);
}

std::int64_t CoprimeTuple45::product() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{1}, std::multiplies<>());
}

Rational polynomial_part_45(const CoprimeTuple45& tuple, std::int64_t n_int)
{
    const auto parts = tuple.parts();
    const Rational n = make_rational(n_int);
    Integer s1 = 0;
    Integer s2 = 0;
    Integer e2 = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const Integer p = static_cast<long>(parts[i]);
        s1 += p;
        s2 += p * p;
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            e2 += p * static_cast<long>(parts[j]);
        }
    }
    const Integer prod = static_cast<long>(tuple.product());

    Rational r;
    if (parts.size() == 4) {
        r = (2 * n * n * n + 3 * Rational(s1) * n * n + Rational(s2 + 3 * e2) * n) / Rational(12 * prod);
    } else {
        // C1 = sum, C2 = sum of squares, C3 = sum of pairwise products.
        r = (n * n * n * n + 2 * Rational(s1) * n * n * n + Rational(s2 + 3 * e2) * n * n +
             Rational(s1 * e2) * n) /
            Rational(24 * prod);
    }
    r.canonicalize();
    return r;
}

RemainderCheck remainder_45(const CoprimeTuple45& tuple)
{
    const std::int64_t period = tuple.product();
    const auto window = static_cast<std::size_t>(2 * period);
    const IntegerSeries alpha = inverse_of_parts(tuple.parts(), window - 1);

    std::vector<Rational> t(window);
    for (std::size_t n = 0; n < window; ++n) {
        t[n] = Rational(alpha[n]) - polynomial_part_45(tuple, static_cast<std::int64_t>(n));
    }

    RemainderCheck out;
    out.period = period;
    out.at_zero = t[0];
    const auto p = static_cast<std::size_t>(period);
    for (std::size_t n = 0; n < p; ++n) {
        if (t[n] != t[n + p]) {
            throw ConsistencyError("remainder not periodic with period " + std::to_string(period) +
                                   " at n=" + std::to_string(n));
        }
        out.max_abs = std::max(out.max_abs, Rational(abs(t[n])));
    }
    out.periodic = true;
    return out;
}

} // namespace qpos
