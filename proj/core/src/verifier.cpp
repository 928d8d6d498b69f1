#include "qpos/verifier.hpp"

#include <string>

#include "qpos/errors.hpp"
#include "qpos/theta.hpp"

namespace qpos {

IntegerSeries gamma_series(const FamilyParams& p, std::int64_t k, std::size_t T)
{
    IntegerSeries s = theta_tail(p.form, k, T);
    for (std::int64_t part : p.triple.parts()) {
        s.div_binomial(part, -1);
    }
    return s;
}

PositivityCertificate certify_family(const FamilyParams& p, const CertifyOptions& options)
{
    PositivityCertificate cert{p, compute_thresholds(p), {}, {}, true};

    for (const KThreshold& t : cert.thresholds.per_k) {
        if (t.N < 1) {
            throw ConsistencyError("N^k must be positive");
        }
        const IntegerSeries gamma = gamma_series(p, t.k, static_cast<std::size_t>(t.N - 1));
        const MinCoefficient m = min_coefficient(gamma);
        cert.checked.push_back(KCheck{t.k, t.L, t.N, m.value, m.at});
        if (m.value < 0) {
            cert.pass = false;
        }
    }

    cert.sample.k_first = cert.thresholds.K;
    cert.sample.k_last = cert.thresholds.K + options.sample_k_extra - 1;
    cert.sample.T = options.sample_T;
    for (std::int64_t k = cert.sample.k_first; k <= cert.sample.k_last; ++k) {
        const MinCoefficient m = min_coefficient(gamma_series(p, k, options.sample_T));
        if (m.value < 0) {
            cert.sample.pass = false;
            throw ConsistencyError("gamma^" + std::to_string(k) + "(" + std::to_string(m.at) +
                                   ") = " + m.value.get_str() + " < 0 with k >= K");
        }
    }
    return cert;
}

Rational block_sum_closed_form(const FamilyParams& p, std::int64_t k, std::int64_t l, std::int64_t n)
{
    const Rational& A = p.form.A();
    const Rational& B = p.form.B();
    const Rational K = make_rational(k);
    const Rational Lr = make_rational(l);
    const Rational N = make_rational(n);
    Rational r = Lr * (A - B) *
                 (6 * A * K * K + 12 * A * K * Lr + 8 * A * Lr * Lr - A - B - p.triple.sum() - 2 * N) /
                 Rational(p.triple.product());
    r.canonicalize();
    return r;
}

CaseProbe case_bound(const FamilyParams& p, std::int64_t k, std::int64_t n)
{
    if (k < 1 || n < 0) {
        throw DomainError("case_bound needs k >= 1 and n >= 0");
    }
    const ThetaForm& form = p.form;
    auto F = [&](std::int64_t x) { return F_value(p.triple, x); };
    auto f = [&](std::int64_t j) { return form.f(j); };
    auto g = [&](std::int64_t j) { return form.g(j); };
    const Rational& D = p.D;

    CaseProbe out;
    if (n < f(k)) {
        out.case_id = 1;
        out.bound = 0;
        return out;
    }
    if (n < g(k + 1)) {
        // Exactly one tail term contributes: gamma(n) = alpha(n - f(k)).
        out.case_id = 2;
        const auto m = static_cast<std::size_t>(n - f(k));
        out.bound = Rational(alpha_series(p.triple, m)[m]);
        return out;
    }
    if (n < f(k + 1)) {
        out.case_id = 3;
        out.bound = F(n - f(k)) - F(n - g(k + 1)) - 2 * D;
        return out;
    }
    if (n < g(k + 2)) {
        out.case_id = 4;
        out.bound = F(n - f(k)) - F(n - g(k + 1)) - F(n - f(k + 1)) - 3 * D;
        return out;
    }
    if (n < f(k + 2)) {
        out.case_id = 5;
        out.bound = F(n - f(k)) - F(n - g(k + 1)) - F(n - f(k + 1)) + F(n - g(k + 2)) - 4 * D;
        return out;
    }

    std::int64_t l = 1;
    while (n >= f(k + 2 * l + 2)) {
        ++l;
    }
    out.l = l;
    const Rational head = block_sum_closed_form(p, k, l, n) + F(n - f(k + 2 * l));
    const Rational Lr = make_rational(l);
    if (n < g(k + 2 * l + 1)) {
        out.case_id = 6;
        out.bound = head - (4 * Lr + 1) * D;
    } else if (n < f(k + 2 * l + 1)) {
        out.case_id = 7;
        out.bound = head - F(n - g(k + 2 * l + 1)) - (4 * Lr + 2) * D;
    } else if (n < g(k + 2 * l + 2)) {
        out.case_id = 8;
        out.bound = head - F(n - g(k + 2 * l + 1)) - F(n - f(k + 2 * l + 1)) - (4 * Lr + 3) * D;
    } else {
        out.case_id = 9;
        out.bound = head - F(n - g(k + 2 * l + 1)) - F(n - f(k + 2 * l + 1)) +
                    F(n - g(k + 2 * l + 2)) - (4 * Lr + 4) * D;
    }
    out.bound.canonicalize();
    return out;
}

CaseProbe case_bound_probe(const FamilyParams& p, std::int64_t k, std::int64_t n, const IntegerSeries& gamma)
{
    if (n < 0 || static_cast<std::size_t>(n) > gamma.order()) {
        throw DomainError("probe index beyond the supplied gamma series");
    }
    CaseProbe out = case_bound(p, k, n);
    out.actual = gamma[static_cast<std::size_t>(n)];
    return out;
}

CaseProbe case_bound_probe(const FamilyParams& p, std::int64_t k, std::int64_t n)
{
    if (n < 0) {
        throw DomainError("case_bound_probe needs n >= 0");
    }
    return case_bound_probe(p, k, n, gamma_series(p, k, static_cast<std::size_t>(n)));
}

} // namespace qpos
