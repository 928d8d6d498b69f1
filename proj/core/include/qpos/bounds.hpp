#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qpos/periodic.hpp"
#include "qpos/rational.hpp"
#include "qpos/theta.hpp"

namespace qpos {

/// u x^2 + v x + w with u > 0.
struct RationalQuadratic {
    Rational u;
    Rational v;
    Rational w;

    RationalQuadratic(Rational u_, Rational v_, Rational w_);

    Rational operator()(const Rational& x) const { return (u * x + v) * x + w; }
    Rational discriminant() const { return v * v - 4 * u * w; }
};

/// (a, b, c, A, B) together with D_{a,b,c}.
struct FamilyParams {
    CoprimeTriple triple;
    ThetaForm form;
    Rational D;
};

/// Builds the parameters, computing D from the periodic decomposition.
FamilyParams make_family(const CoprimeTriple& triple, const ThetaForm& form);

/// The k-quadratics H_1..H_13 whose common root ceiling is K.
RationalQuadratic build_H(int index, const FamilyParams& p);

/// The l-quadratics G_1..G_5 for a fixed k >= 1; their root ceiling is L^k.
RationalQuadratic build_G(int index, const FamilyParams& p, std::int64_t k);

inline constexpr int kHCount = 13;
inline constexpr int kGCount = 5;

/// ceil(max(1, larger real root)), or 1 without real roots. Exact: the
/// result is the least m >= 1 with 2um + v >= 0 and (2um + v)^2 >= disc.
std::int64_t ceil_root(const RationalQuadratic& q);

/// max of ceil_root over a nonempty list.
std::int64_t ceil_T(std::span<const RationalQuadratic> qs);

struct KThreshold {
    std::int64_t k = 0;
    std::int64_t L = 0;
    std::int64_t N = 0;
};

struct Thresholds {
    std::int64_t K = 0;
    std::vector<KThreshold> per_k; // k = 1 .. K-1
};

Thresholds compute_thresholds(const FamilyParams& p);

} // namespace qpos
