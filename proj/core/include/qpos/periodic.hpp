#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qpos/rational.hpp"
#include "qpos/series.hpp"

namespace qpos {

/// Three distinct, pairwise coprime positive integers, stored sorted a < b < c.
class CoprimeTriple {
public:
    CoprimeTriple(std::int64_t x, std::int64_t y, std::int64_t z);

    std::int64_t a() const noexcept { return parts_[0]; }
    std::int64_t b() const noexcept { return parts_[1]; }
    std::int64_t c() const noexcept { return parts_[2]; }
    std::int64_t sum() const noexcept { return parts_[0] + parts_[1] + parts_[2]; }
    std::int64_t product() const noexcept { return parts_[0] * parts_[1] * parts_[2]; }
    std::span<const std::int64_t, 3> parts() const noexcept { return parts_; }

    friend bool operator==(const CoprimeTriple&, const CoprimeTriple&) = default;
    friend auto operator<=>(const CoprimeTriple&, const CoprimeTriple&) = default;

private:
    std::array<std::int64_t, 3> parts_;
};

/// sum alpha(n) q^n = 1 / ((1-q^a)(1-q^b)(1-q^c)).
IntegerSeries alpha_series(const CoprimeTriple& triple, std::size_t T);

/// F(n) = (n^2 + (a+b+c) n) / (2abc). Defined for any integer n.
Rational F_value(const CoprimeTriple& triple, const Rational& n);
Rational F_value(const CoprimeTriple& triple, std::int64_t n);

/// One period of beta(n) = alpha(n) - F(n) together with D = max |beta|.
struct PeriodicDecomposition {
    CoprimeTriple triple;
    std::int64_t period;
    std::vector<Rational> beta_table;
    Rational D;

    const Rational& beta(std::int64_t n) const
    {
        return beta_table[static_cast<std::size_t>(n % period)];
    }
};

/// Computes beta over two periods, verifies beta(n + abc) = beta(n) on the
/// first (ConsistencyError otherwise) and returns the first period and D.
PeriodicDecomposition decompose(const CoprimeTriple& triple);

/// Four or five pairwise coprime distinct positive integers, sorted.
class CoprimeTuple45 {
public:
    explicit CoprimeTuple45(std::vector<std::int64_t> parts);

    std::span<const std::int64_t> parts() const noexcept { return parts_; }
    std::int64_t product() const;

private:
    std::vector<std::int64_t> parts_;
};

/// The polynomial part of 1/prod(1-q^p) for four parts (cubic) or five
/// parts (quartic), evaluated exactly at n.
Rational polynomial_part_45(const CoprimeTuple45& tuple, std::int64_t n);

struct RemainderCheck {
    std::int64_t period = 0;
    bool periodic = false;
    Rational max_abs;
    Rational at_zero;
};

/// t(n) = alpha(n) - polynomial part over [0, 2 * prod parts); verifies the
/// period and reports max |t(n)|. A period violation throws ConsistencyError.
RemainderCheck remainder_45(const CoprimeTuple45& tuple);

} // namespace qpos
