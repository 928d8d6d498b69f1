#include "qpos/bounds.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "qpos/errors.hpp"

namespace qpos {

RationalQuadratic::RationalQuadratic(Rational u_, Rational v_, Rational w_)
    : u(std::move(u_)), v(std::move(v_)), w(std::move(w_))
{
    if (u <= 0) {
        throw DomainError("quadratic needs a positive leading coefficient, got " + to_string(u));
    }
}

FamilyParams make_family(const CoprimeTriple& triple, const ThetaForm& form)
{
    return FamilyParams{triple, form, decompose(triple).D};
}

namespace {

// Shorthand shared by every bound: d = A - B, s = a + b + c, P = abc.
struct Symbols {
    Rational A, B, d, s, P, D;

    explicit Symbols(const FamilyParams& p)
        : A(p.form.A()), B(p.form.B()), d(A - B), s(p.triple.sum()), P(p.triple.product()), D(p.D)
    {
    }
};

struct Coefficients {
    Rational u, v, w;
};

using HRow = Coefficients (*)(const Symbols&);

// H_i as polynomials in k.
constexpr std::array<HRow, kHCount> kHTable = {
    [](const Symbols& x) -> Coefficients {
        return {2 * x.d * x.d / x.P, x.d * (2 * x.A - 2 * x.B + x.s) / x.P,
                x.d * (x.d + x.s) / (2 * x.P) - 2 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {2 * x.d * (x.A + x.B) / x.P, x.d * (2 * x.A + 4 * x.B + x.s) / x.P,
                x.d * (x.A + 3 * x.B + x.s) / (2 * x.P) - 3 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {4 * x.A * x.d / x.P, 2 * (2 * x.A + x.B) * x.d / x.P,
                -x.d * (x.A - 3 * x.B + x.s) / x.P - 3 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {4 * x.A * x.d / x.P, 2 * x.d * (2 * x.A - x.B) / x.P,
                -x.d * (x.A + 5 * x.B + x.s) / x.P - 4 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {4 * x.A * x.d / x.P, 2 * x.d * (2 * x.A - x.B) / x.P,
                -(24 * x.d * (x.A + x.B) + x.s * x.s) / (8 * x.P) - 5 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {4 * x.A * x.d / x.P, 6 * x.d * (2 * x.A - x.B) / x.P,
                x.d * (x.A - 11 * x.B + x.s) / x.P - 4 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {2 * x.d * (3 * x.A - x.B) / x.P, x.d * (10 * x.A - 8 * x.B + x.s) / x.P,
                3 * x.d * (x.A - 5 * x.B + x.s) / (2 * x.P) - 6 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {4 * x.A * x.d / x.P, 6 * x.d * (2 * x.A + x.B) / x.P,
                x.d * (x.A + 13 * x.B + x.s) / x.P - 4 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {2 * x.d * (3 * x.A + x.B) / x.P, x.d * (10 * x.A + x.s + 10 * x.B) / x.P,
                3 * x.d * (x.A + 7 * x.B + x.s) / (2 * x.P) - 7 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {4 * x.A * x.d / x.P, 2 * x.d * (8 * x.A + x.B) / x.P,
                x.d * (x.A - 15 * x.B + x.s) / x.P - 4 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {8 * x.A * x.d / x.P, 4 * x.d * (4 * x.A + x.B) / x.P,
                -2 * x.d * (x.A - 7 * x.B + x.s) / x.P - 7 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {4 * x.A * x.d / x.P, 2 * x.d * (8 * x.A - x.B) / x.P,
                -x.d * (x.A + 17 * x.B + x.s) / x.P - 4 * x.D};
    },
    [](const Symbols& x) -> Coefficients {
        return {8 * x.A * x.d / x.P, 4 * x.d * (4 * x.A - x.B) / x.P,
                -2 * x.d * (x.A + 9 * x.B + x.s) / x.P - 8 * x.D};
    },
};

using GRow = Coefficients (*)(const Symbols&, const Rational&);

// G_i as polynomials in l. The D terms -(4l + c)D split into -4D l and -cD.
constexpr std::array<GRow, kGCount> kGTable = {
    [](const Symbols& x, const Rational& k) -> Coefficients {
        const Rational t = 2 * x.A * k - x.A - x.B;
        return {2 * x.d * t / x.P, (2 * k + 1) * x.d * t / x.P - 4 * x.D,
                -x.s * x.s / (8 * x.P) - x.D};
    },
    [](const Symbols& x, const Rational& k) -> Coefficients {
        return {4 * x.d * (x.A * k - x.B) / x.P,
                x.d * (4 * x.A * k * k + 4 * x.A * k - 6 * x.B * k + x.A - 3 * x.B + x.s) / x.P - 4 * x.D,
                (2 * k + 1) * x.d * (2 * x.A * k - 2 * x.B * k + x.A - x.B + x.s) / (2 * x.P) - 2 * x.D};
    },
    [](const Symbols& x, const Rational& k) -> Coefficients {
        return {4 * x.d * (x.A * k + x.B) / x.P,
                x.d * (4 * x.A * k * k + 4 * x.A * k + 6 * x.B * k + x.A + 5 * x.B + x.s) / x.P - 4 * x.D,
                (2 * k + 1) * x.d * (2 * x.A * k + 2 * x.B * k + x.A + 3 * x.B + x.s) / (2 * x.P) -
                    3 * x.D};
    },
    [](const Symbols& x, const Rational& k) -> Coefficients {
        return {4 * x.d * (x.A * k + x.B) / x.P,
                x.d * (4 * x.A * k * k + 8 * x.A * k + 2 * x.B * k - x.A + 7 * x.B - x.s) / x.P - 4 * x.D,
                x.d * (4 * x.A * k * k + 4 * x.A * k + 2 * x.B * k - x.A + 3 * x.B - x.s) / x.P - 3 * x.D};
    },
    [](const Symbols& x, const Rational& k) -> Coefficients {
        return {4 * x.d * (x.A * k - x.B) / x.P,
                x.d * (4 * x.A * k * k + 8 * x.A * k - 2 * x.B * k - x.A - 9 * x.B - x.s) / x.P - 4 * x.D,
                x.d * (4 * x.A * k * k + 4 * x.A * k - 2 * x.B * k - x.A - 5 * x.B - x.s) / x.P - 4 * x.D};
    },
};

RationalQuadratic to_quadratic(Coefficients c)
{
    c.u.canonicalize();
    c.v.canonicalize();
    c.w.canonicalize();
    return RationalQuadratic(std::move(c.u), std::move(c.v), std::move(c.w));
}

} // namespace

RationalQuadratic build_H(int index, const FamilyParams& p)
{
    if (index < 1 || index > kHCount) {
        throw DomainError("H index out of range: " + std::to_string(index));
    }
    return to_quadratic(kHTable[static_cast<std::size_t>(index - 1)](Symbols(p)));
}

RationalQuadratic build_G(int index, const FamilyParams& p, std::int64_t k)
{
    if (index < 1 || index > kGCount) {
        throw DomainError("G index out of range: " + std::to_string(index));
    }
    if (k < 1) {
        throw DomainError("G quadratics need k >= 1");
    }
    const Symbols x(p);
    const Rational kk = make_rational(k);
    if (x.A * kk - x.B <= 0) {
        throw DomainError("Ak - B must be positive");
    }
    return to_quadratic(kGTable[static_cast<std::size_t>(index - 1)](x, kk));
}

std::int64_t ceil_root(const RationalQuadratic& q)
{
    if (q.u <= 0) {
        throw DomainError("ceil_root needs u > 0");
    }
    const Rational disc = q.discriminant();
    if (disc < 0) {
        return 1;
    }
    // 2um + v >= sqrt(disc) is monotone in m.
    auto at_or_past_root = [&](const Integer& m) {
        const Rational lin = 2 * q.u * Rational(m) + q.v;
        return lin >= 0 && lin * lin >= disc;
    };
    Integer lo = 1;
    if (at_or_past_root(lo)) {
        return 1;
    }
    Integer hi = 2;
    while (!at_or_past_root(hi)) {
        lo = hi;
        hi *= 2;
    }
    // Invariant: !pred(lo), pred(hi).
    while (hi - lo > 1) {
        Integer mid = (lo + hi) / 2;
        if (at_or_past_root(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return to_int64(hi);
}

std::int64_t ceil_T(std::span<const RationalQuadratic> qs)
{
    if (qs.empty()) {
        throw DomainError("ceil_T of an empty family");
    }
    std::int64_t m = 1;
    for (const auto& q : qs) {
        m = std::max(m, ceil_root(q));
    }
    return m;
}

Thresholds compute_thresholds(const FamilyParams& p)
{
    std::vector<RationalQuadratic> hs;
    hs.reserve(kHCount);
    for (int i = 1; i <= kHCount; ++i) {
        hs.push_back(build_H(i, p));
    }
    Thresholds t;
    t.K = ceil_T(hs);
    for (std::int64_t k = 1; k < t.K; ++k) {
        std::vector<RationalQuadratic> gs;
        gs.reserve(kGCount);
        for (int i = 1; i <= kGCount; ++i) {
            gs.push_back(build_G(i, p, k));
        }
        const std::int64_t L = ceil_T(gs);
        t.per_k.push_back(KThreshold{k, L, p.form.f(k + 2 * L)});
    }
    return t;
}

} // namespace qpos
