#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "qpos/errors.hpp"
#include "qpos/identities.hpp"
#include "qpos/products.hpp"
#include "qpos/theta.hpp"

using namespace qpos;

namespace {

IntegerSeries series(std::size_t T, std::initializer_list<std::int64_t> c)
{
    std::vector<std::int64_t> v(c);
    return IntegerSeries::from_coeffs(T, v);
}

} // namespace

TEST_CASE("overpartition and pod generating functions against enumeration")
{
    const auto over = overpartition_series(30);
    const std::vector<long> first = {1, 2, 4, 8, 14, 24};
    for (std::size_t n = 0; n < first.size(); ++n) {
        CHECK(over[n] == first[n]);
    }
    for (long n = 1; n <= 30; ++n) {
        CHECK(over[static_cast<std::size_t>(n)] == oracle::count_overpartitions(n));
    }
    const auto pod = pod_series(30);
    CHECK(pod[0] == 1);
    for (long n = 1; n <= 30; ++n) {
        CHECK(pod[static_cast<std::size_t>(n)] == oracle::count_pod(n));
    }
}

TEST_CASE("(1 + q^e) applied directly agrees with (1 - q^{2e}) / (1 - q^e)")
{
    const std::size_t T = 300;
    IntegerSeries via = partition_series(T);
    for (std::int64_t e = 1; static_cast<std::size_t>(e) <= T; ++e) {
        via.mul_binomial(2 * e, -1).div_binomial(e, -1);
    }
    CHECK(via == overpartition_series(T));
}

TEST_CASE("pentagonal")
{
    const auto r = check_pentagonal(12);
    CHECK(r.equal);
    CHECK(r.order == 12);
    CHECK(!r.first_mismatch);
    CHECK(r.lhs_hash == digest(series(12, {1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1})));
    CHECK(check_pentagonal(0).equal);
    CHECK(check_pentagonal(2000).equal);
}

TEST_CASE("gauss")
{
    const auto [squares, triangular] = check_gauss(9);
    CHECK(squares.equal);
    CHECK(squares.lhs_hash == digest(series(9, {1, -2, 0, 0, 2, 0, 0, 0, 0, -2})));
    CHECK(triangular.equal);
    const auto [s500, t500] = check_gauss(500);
    CHECK(s500.equal);
    CHECK(t500.equal);
}

TEST_CASE("compare_sides reports the first mismatch")
{
    const auto r = compare_sides("x", series(5, {1, 2, 3}), series(5, {1, 2, 4}));
    CHECK_FALSE(r.equal);
    CHECK(r.first_mismatch == std::optional<std::size_t>(2));
    CHECK(r.lhs_hash != r.rhs_hash);
}

TEST_CASE("andrews-merca truncation")
{
    CHECK(check_andrews_merca(1, 300).equal);
    CHECK(check_andrews_merca(3, 300).equal);
    // Empty tail: k(k-1)/2 + (k+1)k > T.
    CHECK(check_andrews_merca(10, 100).equal);
    for (std::int64_t k = 1; k <= 10; ++k) {
        CHECK(check_andrews_merca(k, 500).equal);
    }
    CHECK_THROWS_AS(check_andrews_merca(0, 10), DomainError);
}

TEST_CASE("guo-zeng truncations")
{
    CHECK(check_guo_zeng(GuoZeng::overpartition, 1, 200).equal);
    CHECK(check_guo_zeng(GuoZeng::pod, 2, 200).equal);
    for (std::int64_t k = 1; k <= 10; ++k) {
        CHECK(check_guo_zeng(GuoZeng::overpartition, k, 500).equal);
        CHECK(check_guo_zeng(GuoZeng::pod, k, 500).equal);
    }
}

TEST_CASE("jacobi specialisations")
{
    CHECK(check_jacobi(JacobiProduct::q1_q4_q5, 100).equal);
    CHECK(check_jacobi(JacobiProduct::q1_q4_q5, 500).equal);
    CHECK(check_jacobi(JacobiProduct::q2_q3_q5, 500).equal);
    const ThetaForm t(make_rational(5, 2), make_rational(3, 2));
    CHECK(jacobi_product(JacobiProduct::q1_q4_q5, 100) == theta_full(t, 100));
}

TEST_CASE("equivalences")
{
    CHECK(check_equivalence(Equivalence::partitions, 2, 500).equal);
    CHECK(check_equivalence(Equivalence::mod5_q1_q4, 1, 500).equal);
    for (Equivalence e : kAllEquivalences) {
        for (std::int64_t k = 1; k <= 10; ++k) {
            CAPTURE(name_of(e));
            CAPTURE(k);
            CHECK(check_equivalence(e, k, 500).equal);
        }
        CHECK(parse_equivalence(name_of(e)) == e);
    }
    CHECK_FALSE(parse_equivalence("squares"));
}

TEST_CASE("tail forms are nonnegative")
{
    for (TailFamily t : kAllTailFamilies) {
        for (std::int64_t k = 1; k <= 8; ++k) {
            CAPTURE(name_of(t));
            CAPTURE(k);
            const auto s = tail_positivity_series(t, k, 1000);
            CHECK(min_coefficient(s).value >= 0);
        }
    }
}
