#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "families.hpp"
#include "qpos/bounds.hpp"
#include "qpos/errors.hpp"
#include "qpos/verifier.hpp"

using namespace qpos;

namespace {

using Q = Rational;

struct Coeffs {
    Q u, v, w;
};

// Second, independent entry of the H and G coefficients.
std::vector<Coeffs> hand_H(Q a, Q b, Q c, Q A, Q B, Q D)
{
    const Q s = a + b + c, P = a * b * c, d = A - B;
    return {
        {2 * d * d / P, d * (2 * A - 2 * B + s) / P, d * (d + s) / (2 * P) - 2 * D},
        {2 * d * (A + B) / P, d * (2 * A + 4 * B + s) / P, d * (A + 3 * B + s) / (2 * P) - 3 * D},
        {4 * A * d / P, 2 * (2 * A + B) * d / P, -d * (A - 3 * B + s) / P - 3 * D},
        {4 * A * d / P, 2 * d * (2 * A - B) / P, -d * (A + 5 * B + s) / P - 4 * D},
        {4 * A * d / P, 2 * d * (2 * A - B) / P, -(24 * d * (A + B) + s * s) / (8 * P) - 5 * D},
        {4 * A * d / P, 6 * d * (2 * A - B) / P, d * (A - 11 * B + s) / P - 4 * D},
        {2 * d * (3 * A - B) / P, d * (10 * A - 8 * B + s) / P, 3 * d * (A - 5 * B + s) / (2 * P) - 6 * D},
        {4 * A * d / P, 6 * d * (2 * A + B) / P, d * (A + 13 * B + s) / P - 4 * D},
        {2 * d * (3 * A + B) / P, d * (10 * A + s + 10 * B) / P, 3 * d * (A + 7 * B + s) / (2 * P) - 7 * D},
        {4 * A * d / P, 2 * d * (8 * A + B) / P, d * (A - 15 * B + s) / P - 4 * D},
        {8 * A * d / P, 4 * d * (4 * A + B) / P, -2 * d * (A - 7 * B + s) / P - 7 * D},
        {4 * A * d / P, 2 * d * (8 * A - B) / P, -d * (A + 17 * B + s) / P - 4 * D},
        {8 * A * d / P, 4 * d * (4 * A - B) / P, -2 * d * (A + 9 * B + s) / P - 8 * D},
    };
}

std::vector<Coeffs> hand_G(Q a, Q b, Q c, Q A, Q B, Q D, Q k)
{
    const Q s = a + b + c, P = a * b * c, d = A - B;
    return {
        {2 * d * (2 * A * k - A - B) / P, (2 * k + 1) * d * (2 * A * k - A - B) / P - 4 * D, -s * s / (8 * P) - D},
        {4 * d * (A * k - B) / P, d * (4 * A * k * k + 4 * A * k - 6 * B * k + A - 3 * B + s) / P - 4 * D,
         (2 * k + 1) * d * (2 * A * k - 2 * B * k + A - B + s) / (2 * P) - 2 * D},
        {4 * d * (A * k + B) / P, d * (4 * A * k * k + 4 * A * k + 6 * B * k + A + 5 * B + s) / P - 4 * D,
         (2 * k + 1) * d * (2 * A * k + 2 * B * k + A + 3 * B + s) / (2 * P) - 3 * D},
        {4 * d * (A * k + B) / P, d * (4 * A * k * k + 8 * A * k + 2 * B * k - A + 7 * B - s) / P - 4 * D,
         d * (4 * A * k * k + 4 * A * k + 2 * B * k - A + 3 * B - s) / P - 3 * D},
        {4 * d * (A * k - B) / P, d * (4 * A * k * k + 8 * A * k - 2 * B * k - A - 9 * B - s) / P - 4 * D,
         d * (4 * A * k * k + 4 * A * k - 2 * B * k - A - 5 * B - s) / P - 4 * D},
    };
}

FamilyParams family(const testdata::Row& r)
{
    return make_family(CoprimeTriple(r.a, r.b, r.c), ThetaForm(parse_rational(r.A), parse_rational(r.B)));
}

FamilyParams family(std::int64_t a, std::int64_t b, std::int64_t c, const char* A, const char* B)
{
    return make_family(CoprimeTriple(a, b, c), ThetaForm(parse_rational(A), parse_rational(B)));
}

Q eval(const Coeffs& c, const Q& x)
{
    return c.u * x * x + c.v * x + c.w;
}

Q random_rational(std::mt19937_64& rng, int span)
{
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 12);
    return make_rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("H and G match an independent transcription at random points")
{
    std::mt19937_64 rng(31337);
    for (const auto& row : testdata::table_rows()) {
        const auto p = family(row);
        const auto H = hand_H(row.a, row.b, row.c, parse_rational(row.A), parse_rational(row.B), p.D);
        for (int i = 1; i <= kHCount; ++i) {
            const auto q = build_H(i, p);
            for (int t = 0; t < 3; ++t) {
                const Q x = random_rational(rng, 50);
                CHECK(q(x) == eval(H[static_cast<std::size_t>(i - 1)], x));
            }
        }
        for (std::int64_t k = 1; k <= 6; ++k) {
            const auto G = hand_G(row.a, row.b, row.c, parse_rational(row.A), parse_rational(row.B), p.D, k);
            for (int i = 1; i <= kGCount; ++i) {
                const auto q = build_G(i, p, k);
                for (int t = 0; t < 3; ++t) {
                    const Q x = random_rational(rng, 50);
                    CHECK(q(x) == eval(G[static_cast<std::size_t>(i - 1)], x));
                }
            }
        }
    }
}

TEST_CASE("quadratic examples")
{
    const auto p = family(1, 2, 3, "3/2", "1/2");
    CHECK(build_H(1, p)(3) == make_rational(67, 12));
    CHECK(build_H(5, p).w == make_rational(-84, 48) - 5);
    CHECK(build_G(1, p, 2).u == make_rational(4, 3));
    CHECK(build_G(5, p, 1).u == make_rational(2, 3));

    // Constant term of H1 without the D contribution.
    const Q d = make_rational(1);
    CHECK(build_H(1, p).w + 2 * p.D == d * (d + 6) / 12);

    for (const auto& row : testdata::table_rows()) {
        const auto f = family(row);
        const Q s = row.a + row.b + row.c;
        const Q P = row.a * row.b * row.c;
        CHECK(build_H(5, f).w < 0);
        for (std::int64_t k = 1; k < 8; ++k) {
            CHECK(build_G(1, f, k).w == -s * s / (8 * P) - f.D);
            CHECK(build_G(1, f, k).w < 0);
            for (int i = 1; i <= kGCount; ++i) {
                CHECK(build_G(i, f, k).u > 0);
            }
        }
        for (int i = 1; i <= kHCount; ++i) {
            CHECK(build_H(i, f).u > 0);
        }
    }
    CHECK_THROWS_AS(build_G(1, p, 0), DomainError);
    CHECK_THROWS_AS(build_H(0, p), DomainError);
    CHECK_THROWS_AS(build_H(14, p), DomainError);
    CHECK_THROWS_AS(build_G(6, p, 1), DomainError);
}

TEST_CASE("ceil_root examples")
{
    CHECK(ceil_root({1, 0, -4}) == 2);
    CHECK(ceil_root({1, 0, 1}) == 1);
    CHECK(ceil_root({1, -1, -5}) == 3);
    const std::vector<RationalQuadratic> two = {{1, 0, -4}, {1, 0, 1}};
    CHECK(ceil_T(two) == 2);
    CHECK_THROWS_AS(ceil_T(std::span<const RationalQuadratic>{}), DomainError);
    CHECK_THROWS_AS(RationalQuadratic(0, 1, 1), DomainError);
    CHECK_THROWS_AS(RationalQuadratic(-1, 1, 1), DomainError);
    // Large roots.
    CHECK(ceil_root({1, 0, -1000000}) == 1000);
    CHECK(ceil_root({1, 0, -1000001}) == 1001);
    CHECK(ceil_root({make_rational(1, 1000), -1000, 0}) == 1000000);
}

TEST_CASE("ceil_root fuzz: defining predicate")
{
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<int> un(1, 40);
    for (int trial = 0; trial < 3000; ++trial) {
        const RationalQuadratic q(make_rational(un(rng), un(rng) % 7 + 1), random_rational(rng, 400),
                                  random_rational(rng, 4000));
        const std::int64_t m = ceil_root(q);
        REQUIRE(m >= 1);
        // q >= 0 from m onwards: m is at or past the vertex and q(m) >= 0.
        CHECK(q(m) >= 0);
        if (q.discriminant() >= 0) {
            CHECK(2 * q.u * m + q.v >= 0);
        }
        if (m > 1) {
            const Q prev = m - 1;
            CHECK_FALSE((q(prev) >= 0 && 2 * q.u * prev + q.v >= 0));
        }
    }
}

TEST_CASE("ceil_root on integer-root quadratics agrees with floating point off the boundary")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> root(-50, 500);
    std::uniform_int_distribution<int> lead(1, 9);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::int64_t r1 = root(rng), r2 = root(rng);
        const Q u = lead(rng);
        const RationalQuadratic q(u, -u * (r1 + r2), u * r1 * r2);
        CHECK(ceil_root(q) == std::max<std::int64_t>(1, std::max(r1, r2)));

        // Perturbed: compare against long double where the root is not near an integer.
        const RationalQuadratic p(u, -u * (r1 + r2), u * r1 * r2 + make_rational(1, 3));
        const long double disc = p.discriminant().get_d();
        if (disc >= 0) {
            const long double x = (-p.v.get_d() + std::sqrt(disc)) / (2 * p.u.get_d());
            if (std::abs(x - std::round(x)) > 1e-6) {
                CHECK(ceil_root(p) == std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(x))));
            }
        } else {
            CHECK(ceil_root(p) == 1);
        }
    }
}

TEST_CASE("ceil_root is 1 under the small-root preconditions")
{
    std::mt19937_64 rng(7);
    int hits = 0;
    while (hits < 2000) {
        const Q u = make_rational(static_cast<int>(rng() % 30) + 1, static_cast<int>(rng() % 5) + 1);
        const Q v = random_rational(rng, 60);
        const Q w = random_rational(rng, 60);
        const bool c1 = 2 * u + v >= 0 && u + v + w >= 0;
        const bool c2 = w <= 0 && u + v + w >= 0;
        if (!(c1 || c2)) {
            continue;
        }
        ++hits;
        CHECK(ceil_root({u, v, w}) == 1);
    }
}

TEST_CASE("thresholds reproduce all seventeen rows")
{
    for (const auto& row : testdata::table_rows()) {
        CAPTURE(row.a);
        CAPTURE(row.b);
        CAPTURE(row.c);
        CAPTURE(row.A);
        const auto p = family(row);
        CHECK(to_string(p.D) == row.D);
        const auto t = compute_thresholds(p);
        CHECK(t.K == row.K);
        std::vector<std::int64_t> N;
        for (const auto& kt : t.per_k) {
            N.push_back(kt.N);
            const Q x = kt.k + 2 * kt.L;
            CHECK(Q(kt.N) == p.form.A() * x * x + p.form.B() * x);
        }
        CHECK(N == row.N);

        for (int i = 1; i <= kHCount; ++i) {
            const auto h = build_H(i, p);
            CHECK(h(t.K) >= 0);
            // Nonnegative from K onwards: K is at or past the vertex.
            CHECK(2 * h.u * t.K + h.v >= 0);
        }
    }
}

namespace {

// Case lower bounds written out directly from F, f and g.
struct HandBounds {
    FamilyParams p;
    Q F(const Q& x) const { return F_value(p.triple, x); }
    Q f(const Q& j) const { return p.form.A() * j * j + p.form.B() * j; }
    Q g(const Q& j) const { return p.form.A() * j * j - p.form.B() * j; }
    Q block(const Q& k, const Q& l, const Q& n) const
    {
        Q sum = 0;
        for (Q j = 0; j < l; j += 1) {
            const Q m = k + 2 * j;
            sum += F(n - f(m)) - F(n - g(m + 1)) - F(n - f(m + 1)) + F(n - g(m + 2));
        }
        return sum;
    }
    Q case3(const Q& k, const Q& n) const { return F(n - f(k)) - F(n - g(k + 1)) - 2 * p.D; }
    Q case4(const Q& k, const Q& n) const { return case3(k, n) - F(n - f(k + 1)) - p.D; }
    Q case5(const Q& k, const Q& n) const { return case4(k, n) + F(n - g(k + 2)) - p.D; }
    Q case6(const Q& k, const Q& l, const Q& n) const
    {
        return block(k, l, n) + F(n - f(k + 2 * l)) - (4 * l + 1) * p.D;
    }
    Q case7(const Q& k, const Q& l, const Q& n) const
    {
        return case6(k, l, n) - F(n - g(k + 2 * l + 1)) - p.D;
    }
    Q case8(const Q& k, const Q& l, const Q& n) const
    {
        return case7(k, l, n) - F(n - f(k + 2 * l + 1)) - p.D;
    }
    Q case9(const Q& k, const Q& l, const Q& n) const
    {
        return case8(k, l, n) + F(n - g(k + 2 * l + 2)) - p.D;
    }
};

} // namespace

TEST_CASE("H1..H4 are the case 3-5 bounds at interval endpoints")
{
    for (const auto& row : testdata::table_rows()) {
        const HandBounds hb{family(row)};
        for (std::int64_t ki = 1; ki <= 8; ++ki) {
            const Q k = ki;
            CHECK(build_H(1, hb.p)(k) == hb.case3(k, hb.g(k + 1)));
            CHECK(build_H(2, hb.p)(k) == hb.case4(k, hb.f(k + 1)));
            CHECK(build_H(3, hb.p)(k) == hb.case4(k, hb.g(k + 2)));
            CHECK(build_H(4, hb.p)(k) == hb.case5(k, hb.f(k + 2)));
        }
    }
}

TEST_CASE("G2..G5 are the case 7-9 bounds at interval endpoints, G1 is below case 6")
{
    for (const auto& row : testdata::table_rows()) {
        const HandBounds hb{family(row)};
        for (std::int64_t ki = 1; ki <= 5; ++ki) {
            const Q k = ki;
            for (std::int64_t li = 1; li <= 5; ++li) {
                const Q l = li;
                CHECK(build_G(2, hb.p, ki)(l) == hb.case7(k, l, hb.g(k + 2 * l + 1)));
                CHECK(build_G(3, hb.p, ki)(l) == hb.case8(k, l, hb.f(k + 2 * l + 1)));
                CHECK(build_G(4, hb.p, ki)(l) == hb.case8(k, l, hb.g(k + 2 * l + 2)));
                CHECK(build_G(5, hb.p, ki)(l) == hb.case9(k, l, hb.f(k + 2 * l + 2)));
                const Q g1 = build_G(1, hb.p, ki)(l);
                for (Q n = hb.f(k + 2 * l); n < hb.g(k + 2 * l + 1); n += 1) {
                    CHECK(g1 <= hb.case6(k, l, n));
                }
            }
        }
    }
}

TEST_CASE("case_bound matches the hand-written bounds and the closed-form block sum")
{
    for (const auto& row : testdata::table_rows()) {
        const HandBounds hb{family(row)};
        for (std::int64_t k = 1; k <= 4; ++k) {
            const std::int64_t top = hb.p.form.f(k + 8);
            for (std::int64_t n = 0; n < top; n += 3) {
                const CaseProbe c = case_bound(hb.p, k, n);
                const Q K = k, N = n, l = c.l;
                switch (c.case_id) {
                case 1: CHECK(c.bound == 0); break;
                case 2: CHECK(c.bound >= 0); break;
                case 3: CHECK(c.bound == hb.case3(K, N)); break;
                case 4: CHECK(c.bound == hb.case4(K, N)); break;
                case 5: CHECK(c.bound == hb.case5(K, N)); break;
                case 6: CHECK(c.bound == hb.case6(K, l, N)); break;
                case 7: CHECK(c.bound == hb.case7(K, l, N)); break;
                case 8: CHECK(c.bound == hb.case8(K, l, N)); break;
                case 9: CHECK(c.bound == hb.case9(K, l, N)); break;
                default: FAIL("unknown case");
                }
                if (c.l >= 1) {
                    CHECK(block_sum_closed_form(hb.p, k, c.l, n) == hb.block(K, l, N));
                }
            }
        }
    }
}
