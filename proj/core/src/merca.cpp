#include "qpos/merca.hpp"

#include <string>

#include "qpos/bounds.hpp"
#include "qpos/errors.hpp"
#include "qpos/products.hpp"
#include "qpos/theta.hpp"
#include "qpos/verifier.hpp"

namespace qpos {

namespace {

const ThetaForm& pentagonal_form()
{
    static const ThetaForm form(make_rational(3, 2), make_rational(1, 2));
    return form;
}

void require_which(int which)
{
    if (which != 1 && which != 2) {
        throw DomainError("conjecture selector must be 1 or 2");
    }
}

} // namespace

MercaExponent merca_N(std::int64_t n)
{
    if (n < 1) {
        throw DomainError("merca_N needs n >= 1");
    }
    int nu = 0;
    for (std::int64_t m = n; m % 2 == 0; m /= 2) {
        ++nu;
    }
    const Rational N = make_rational(n) * (1 + make_rational(nu, 2));
    if (!is_integer(N)) {
        throw DomainError("N_" + std::to_string(n) + " = " + to_string(N) + " is not an integer");
    }
    return MercaExponent{n, nu, to_int64(N.get_num())};
}

std::vector<std::int64_t> merca_exponents(std::size_t T)
{
    std::vector<std::int64_t> out;
    const auto limit = static_cast<std::int64_t>(T);
    for (std::int64_t n = 1; 2 * n <= limit; ++n) {
        const std::int64_t N = merca_N(2 * n).N;
        if (N <= limit) {
            out.push_back(N);
        }
    }
    return out;
}

IntegerSeries merca_product(std::size_t T)
{
    return product_from_exponents(merca_exponents(T), T);
}

MercaContext::MercaContext(std::size_t T)
    : T_(T), product_(merca_product(T)), quotient_(partition_series(T) * product_), P_(quotient_)
{
    P_.mul_binomial(1, -1);
    P_.mul_binomial(4, -1);
    P_.mul_binomial(5, -1);
}

IntegerSeries MercaContext::display_form(int which, std::int64_t k) const
{
    require_which(which);
    if (k < 1) {
        throw DomainError("k must be >= 1");
    }
    // sum_{j=1-k}^{k} or sum_{j=-k}^{k} of (-1)^j q^{j(3j-1)/2}.
    IntegerSeries partial(T_);
    const std::int64_t lo = which == 1 ? 1 - k : -k;
    for (std::int64_t j = lo; j <= k; ++j) {
        partial.add_term(j * (3 * j - 1) / 2, parity_sign(j));
    }
    // (1 - partial / (q;q)) * prod = prod - quotient * partial
    IntegerSeries s = product_ - quotient_ * partial;
    const int sign = which == 1 ? parity_sign(k) : parity_sign(k - 1);
    return s * Integer(sign);
}

IntegerSeries MercaContext::tail_form(int which, std::int64_t k) const
{
    require_which(which);
    if (which == 1) {
        static const FamilyParams family = make_family(CoprimeTriple(1, 4, 5), pentagonal_form());
        return P_ * gamma_series(family, k, T_);
    }
    IntegerSeries g = gamma_prime_series(k, T_);
    g.div_binomial(4, -1);
    g.div_binomial(5, -1);
    return P_ * g;
}

ProductFactorResult check_product_factor(std::size_t T)
{
    MercaContext ctx(T);
    ProductFactorResult r{ctx.P(), true, std::nullopt};
    for (std::size_t n = 0; n < r.P.size(); ++n) {
        if (r.P[n] < 0) {
            r.nonnegative = false;
            r.first_negative = n;
            break;
        }
    }
    return r;
}

IntegerSeries gamma_prime_series(std::int64_t k, std::size_t T)
{
    if (k < 1) {
        throw DomainError("gamma_prime_series needs k >= 1");
    }
    // (-1)^{j+k-1} = -(-1)^{j+k}; theta_outside carries (-1)^j.
    IntegerSeries s = theta_outside(pentagonal_form(), -k, k, T);
    s *= Integer(parity_sign(k - 1));
    s.div_binomial(1, -1);
    return s;
}

int gamma_prime_pattern(std::int64_t k, std::int64_t n)
{
    auto f = [](std::int64_t j) { return j * (3 * j + 1) / 2; };
    auto g = [](std::int64_t j) { return j * (3 * j - 1) / 2; };
    if (n < g(k + 1)) {
        return 0;
    }
    std::int64_t l = 0;
    while (n >= g(k + 2 * l + 3)) {
        ++l;
    }
    if (n < f(k + 2 * l + 1)) {
        return 1;
    }
    if (n < g(k + 2 * l + 2)) {
        return 2;
    }
    if (n < f(k + 2 * l + 2)) {
        return 1;
    }
    return 0;
}

MercaCertificate check_merca_conjecture(const MercaContext& ctx, const MercaContext& route_ctx, int which,
                                        std::int64_t k)
{
    require_which(which);
    MercaCertificate c;
    c.which = which;
    c.k = k;
    c.T = ctx.order();
    const MinCoefficient m = min_coefficient(ctx.display_form(which, k));
    c.min_coeff = m.value;
    c.min_at = m.at;
    c.nonnegative = m.value >= 0;

    c.route_T = route_ctx.order();
    c.route_mismatch = first_mismatch(route_ctx.display_form(which, k), route_ctx.tail_form(which, k));
    c.routes_equal = !c.route_mismatch.has_value();
    c.pass = c.nonnegative && c.routes_equal;
    return c;
}

MercaCertificate check_merca_conjecture(int which, std::int64_t k, std::size_t T, std::size_t route_T)
{
    if (route_T > T) {
        throw DomainError("route order must not exceed the positivity order");
    }
    const MercaContext ctx(T);
    const MercaContext route_ctx(route_T);
    return check_merca_conjecture(ctx, route_ctx, which, k);
}

} // namespace qpos
