#include "qpos/identities.hpp"

#include <string>

#include "qpos/errors.hpp"
#include "qpos/products.hpp"
#include "qpos/theta.hpp"

namespace qpos {

namespace {

const ThetaForm& pentagonal_form()
{
    static const ThetaForm form(make_rational(3, 2), make_rational(1, 2));
    return form;
}

const ThetaForm& square_form()
{
    static const ThetaForm form(make_rational(1), make_rational(0));
    return form;
}

const ThetaForm& pod_form()
{
    static const ThetaForm form(make_rational(2), make_rational(1));
    return form;
}

const ThetaForm& mod5_form(JacobiProduct which)
{
    static const ThetaForm form_a(make_rational(5, 2), make_rational(3, 2));
    static const ThetaForm form_b(make_rational(5, 2), make_rational(1, 2));
    return which == JacobiProduct::q1_q4_q5 ? form_a : form_b;
}

void require_k(std::int64_t k)
{
    if (k < 1) {
        throw DomainError("k must be >= 1");
    }
}

// sum_{j=0}^{k-1} (-1)^j q^{e(j)} (1 - q^{e(j) + step(j)}) with the two exponent maps given.
template <typename Exp, typename Step>
IntegerSeries paired_partial_sum(std::int64_t k, std::size_t T, Exp e, Step step)
{
    IntegerSeries s(T);
    for (std::int64_t j = 0; j < k; ++j) {
        const int sign = parity_sign(j);
        s.add_term(e(j), sign);
        s.add_term(e(j) + step(j), -sign);
    }
    return s;
}

// Adds sign * q^offset * body to acc, where body is built at the reduced
// order T - offset so that work shrinks as terms move right.
template <typename Body>
void add_shifted_term(IntegerSeries& acc, std::int64_t offset, int sign, Body body)
{
    const auto rem = static_cast<std::size_t>(static_cast<std::int64_t>(acc.order()) - offset);
    const IntegerSeries t = body(rem);
    for (std::size_t n = 0; n <= rem; ++n) {
        if (sign > 0) {
            acc[n + static_cast<std::size_t>(offset)] += t[n];
        } else {
            acc[n + static_cast<std::size_t>(offset)] -= t[n];
        }
    }
}

IntegerSeries inverse_jacobi_product(JacobiProduct which, std::size_t T)
{
    IntegerSeries s = IntegerSeries::one(T);
    const std::int64_t r = which == JacobiProduct::q1_q4_q5 ? 1 : 2;
    divide_pochhammer(s, r, 5, std::nullopt, -1);
    divide_pochhammer(s, 5 - r, 5, std::nullopt, -1);
    divide_pochhammer(s, 5, 5, std::nullopt, -1);
    return s;
}

} // namespace

IdentityReport compare_sides(std::string name, const IntegerSeries& lhs, const IntegerSeries& rhs)
{
    IdentityReport r;
    r.name = std::move(name);
    r.order = lhs.order();
    r.lhs_hash = digest(lhs);
    r.rhs_hash = digest(rhs);
    r.first_mismatch = first_mismatch(lhs, rhs);
    r.equal = !r.first_mismatch.has_value();
    return r;
}

IntegerSeries overpartition_series(std::size_t T)
{
    IntegerSeries s = pochhammer(1, 1, std::nullopt, +1, T);
    divide_pochhammer(s, 1, 1, std::nullopt, -1);
    return s;
}

IntegerSeries pod_series(std::size_t T)
{
    IntegerSeries s = pochhammer(1, 2, std::nullopt, +1, T);
    divide_pochhammer(s, 2, 2, std::nullopt, -1);
    return s;
}

IntegerSeries jacobi_product(JacobiProduct which, std::size_t T)
{
    const std::int64_t r = which == JacobiProduct::q1_q4_q5 ? 1 : 2;
    IntegerSeries s = pochhammer(r, 5, std::nullopt, -1, T);
    s *= pochhammer(5 - r, 5, std::nullopt, -1, T);
    s *= pochhammer(5, 5, std::nullopt, -1, T);
    return s;
}

IdentityReport check_pentagonal(std::size_t T)
{
    std::vector<std::int64_t> exps;
    for (std::size_t e = 1; e <= T; ++e) {
        exps.push_back(static_cast<std::int64_t>(e));
    }
    return compare_sides("pentagonal", product_from_exponents(exps, T), theta_full(pentagonal_form(), T));
}

std::pair<IdentityReport, IdentityReport> check_gauss(std::size_t T)
{
    IntegerSeries rhs5 = euler_product(T);
    divide_pochhammer(rhs5, 1, 1, std::nullopt, +1);
    IdentityReport r5 = compare_sides("gauss_squares", theta_full(square_form(), T), rhs5);

    IntegerSeries lhs6 = IntegerSeries(T);
    const auto limit = static_cast<std::int64_t>(T);
    for (std::int64_t j = 0; j * (2 * j + 1) <= limit; ++j) {
        const int sign = parity_sign(j);
        lhs6.add_term(j * (2 * j + 1), sign);
        lhs6.add_term((j + 1) * (2 * j + 1), -sign);
    }
    IntegerSeries rhs6 = pochhammer(2, 2, std::nullopt, -1, T);
    divide_pochhammer(rhs6, 1, 2, std::nullopt, +1);
    IdentityReport r6 = compare_sides("gauss_triangular", lhs6, rhs6);
    return {std::move(r5), std::move(r6)};
}

IdentityReport check_andrews_merca(std::int64_t k, std::size_t T)
{
    require_k(k);
    const IntegerSeries partial = paired_partial_sum(
        k, T, [](std::int64_t j) { return j * (3 * j + 1) / 2; }, [](std::int64_t j) { return 2 * j + 1; });
    const IntegerSeries lhs = partition_series(T) * partial;

    // Term j has lowest exponent k(k-1)/2 + (k+1)j, increasing in j.
    IntegerSeries rhs = IntegerSeries::one(T);
    const int sign = parity_sign(k - 1);
    const auto limit = static_cast<std::int64_t>(T);
    for (std::int64_t j = k;; ++j) {
        const std::int64_t offset = k * (k - 1) / 2 + (k + 1) * j;
        if (offset > limit) {
            break;
        }
        add_shifted_term(rhs, offset, sign, [&](std::size_t rem) {
            IntegerSeries t = q_binomial(j - 1, k - 1, rem);
            divide_pochhammer(t, 1, 1, j, -1);
            return t;
        });
    }
    return compare_sides("andrews_merca_k" + std::to_string(k), lhs, rhs);
}

IdentityReport check_guo_zeng(GuoZeng variant, std::int64_t k, std::size_t T)
{
    require_k(k);
    const auto limit = static_cast<std::int64_t>(T);
    const int sign = parity_sign(k - 1);
    IntegerSeries rhs = IntegerSeries::one(T);

    if (variant == GuoZeng::overpartition) {
        const IntegerSeries lhs = overpartition_series(T) * theta_partial(square_form(), 1 - k, k - 1, T);
        // (-q;q)_{k-1} (-1;q)_{j-k+1} q^{jk} / (q;q)_j [j-1, k-1]
        for (std::int64_t j = k; j * k <= limit; ++j) {
            add_shifted_term(rhs, j * k, sign, [&](std::size_t rem) {
                IntegerSeries t = q_binomial(j - 1, k - 1, rem);
                t *= pochhammer(1, 1, k - 1, +1, rem);
                t *= pochhammer(0, 1, j - k + 1, +1, rem);
                divide_pochhammer(t, 1, 1, j, -1);
                return t;
            });
        }
        return compare_sides("guo_zeng_squares_k" + std::to_string(k), lhs, rhs);
    }

    const IntegerSeries partial = paired_partial_sum(
        k, T, [](std::int64_t j) { return j * (2 * j + 1); }, [](std::int64_t j) { return 2 * j + 1; });
    const IntegerSeries lhs = pod_series(T) * partial;
    // (-q;q^2)_k (-q;q^2)_{j-k} q^{2(k+1)j-k} / (q^2;q^2)_j [j-1, k-1]_{q^2}
    for (std::int64_t j = k; 2 * (k + 1) * j - k <= limit; ++j) {
        add_shifted_term(rhs, 2 * (k + 1) * j - k, sign, [&](std::size_t rem) {
            IntegerSeries t = q_binomial(j - 1, k - 1, rem, 2);
            t *= pochhammer(1, 2, k, +1, rem);
            t *= pochhammer(1, 2, j - k, +1, rem);
            divide_pochhammer(t, 2, 2, j, -1);
            return t;
        });
    }
    return compare_sides("guo_zeng_pod_k" + std::to_string(k), lhs, rhs);
}

IdentityReport check_jacobi(JacobiProduct which, std::size_t T)
{
    return compare_sides(std::string("jacobi_") + std::string(name_of(which)), jacobi_product(which, T),
                         theta_full(mod5_form(which), T));
}

IntegerSeries tail_positivity_series(TailFamily which, std::int64_t k, std::size_t T)
{
    require_k(k);
    switch (which) {
    case TailFamily::partitions:
        return partition_series(T) * theta_tail(pentagonal_form(), k, T);
    case TailFamily::overpartitions:
        return overpartition_series(T) * theta_tail(square_form(), k, T);
    case TailFamily::pod:
        return pod_series(T) * theta_tail(pod_form(), k, T);
    case TailFamily::mod5_q1_q4:
        return inverse_jacobi_product(JacobiProduct::q1_q4_q5, T) *
               theta_tail(mod5_form(JacobiProduct::q1_q4_q5), k, T);
    case TailFamily::mod5_q2_q3:
        return inverse_jacobi_product(JacobiProduct::q2_q3_q5, T) *
               theta_tail(mod5_form(JacobiProduct::q2_q3_q5), k, T);
    }
    throw DomainError("unknown tail family");
}

IdentityReport check_equivalence(Equivalence pair, std::int64_t k, std::size_t T)
{
    require_k(k);
    const int lead = parity_sign(k - 1);
    IntegerSeries lhs(T);
    TailFamily tail = TailFamily::partitions;

    switch (pair) {
    case Equivalence::partitions: {
        const IntegerSeries partial = paired_partial_sum(
            k, T, [](std::int64_t j) { return j * (3 * j + 1) / 2; }, [](std::int64_t j) { return 2 * j + 1; });
        lhs = partition_series(T) * partial * Integer(lead);
        tail = TailFamily::partitions;
        break;
    }
    case Equivalence::pod: {
        const IntegerSeries partial = paired_partial_sum(
            k, T, [](std::int64_t j) { return j * (2 * j + 1); }, [](std::int64_t j) { return 2 * j + 1; });
        lhs = pod_series(T) * partial * Integer(lead);
        tail = TailFamily::pod;
        break;
    }
    case Equivalence::overpartitions: {
        // (-1)^{k-1} (pbar(n) + 2 sum_{j=1}^{k-1} (-1)^j pbar(n - j^2)) - pbar(n - k^2)
        IntegerSeries weights = IntegerSeries::one(T);
        for (std::int64_t j = 1; j < k; ++j) {
            weights.add_term(j * j, 2 * parity_sign(j));
        }
        weights *= Integer(lead);
        weights.add_term(k * k, -1);
        lhs = overpartition_series(T) * weights;
        tail = TailFamily::overpartitions;
        break;
    }
    case Equivalence::mod5_q1_q4:
    case Equivalence::mod5_q2_q3: {
        const JacobiProduct which =
            pair == Equivalence::mod5_q1_q4 ? JacobiProduct::q1_q4_q5 : JacobiProduct::q2_q3_q5;
        lhs = inverse_jacobi_product(which, T) * theta_partial(mod5_form(which), -k, k - 1, T) *
              Integer(lead);
        tail = pair == Equivalence::mod5_q1_q4 ? TailFamily::mod5_q1_q4 : TailFamily::mod5_q2_q3;
        break;
    }
    }
    lhs.add_term(0, -lead); // (-1)^k
    return compare_sides("equivalence_" + std::string(name_of(pair)) + "_k" + std::to_string(k), lhs,
                         tail_positivity_series(tail, k, T));
}

std::string_view name_of(Equivalence e)
{
    switch (e) {
    case Equivalence::partitions: return "partitions";
    case Equivalence::pod: return "pod";
    case Equivalence::overpartitions: return "overpartitions";
    case Equivalence::mod5_q1_q4: return "mod5_q1_q4";
    case Equivalence::mod5_q2_q3: return "mod5_q2_q3";
    }
    return "?";
}

std::string_view name_of(TailFamily t)
{
    switch (t) {
    case TailFamily::partitions: return "partitions";
    case TailFamily::overpartitions: return "overpartitions";
    case TailFamily::pod: return "pod";
    case TailFamily::mod5_q1_q4: return "mod5_q1_q4";
    case TailFamily::mod5_q2_q3: return "mod5_q2_q3";
    }
    return "?";
}

std::string_view name_of(JacobiProduct j)
{
    return j == JacobiProduct::q1_q4_q5 ? "q1_q4_q5" : "q2_q3_q5";
}

std::optional<Equivalence> parse_equivalence(std::string_view s)
{
    for (Equivalence e : kAllEquivalences) {
        if (name_of(e) == s) {
            return e;
        }
    }
    return std::nullopt;
}

} // namespace qpos
