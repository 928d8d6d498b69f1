#include "qpos/series.hpp"

#include <sstream>

#include "qpos/errors.hpp"

namespace qpos {

namespace {

void require_same_order(const IntegerSeries& a, const IntegerSeries& b, const char* op)
{
    if (a.order() != b.order()) {
        throw OrderMismatchError(std::string(op) + ": order " + std::to_string(a.order()) +
                                 " vs " + std::to_string(b.order()));
    }
}

} // namespace

IntegerSeries::IntegerSeries(std::size_t order) : coeffs_(order + 1) {}

IntegerSeries IntegerSeries::one(std::size_t order)
{
    IntegerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

IntegerSeries IntegerSeries::monomial(std::size_t order, std::int64_t exponent, const Integer& coeff)
{
    IntegerSeries s(order);
    s.add_term(exponent, coeff);
    return s;
}

IntegerSeries IntegerSeries::from_coeffs(std::size_t order, std::span<const std::int64_t> coeffs)
{
    IntegerSeries s(order);
    for (std::size_t i = 0; i < coeffs.size() && i <= order; ++i) {
        s.coeffs_[i] = static_cast<long>(coeffs[i]);
    }
    return s;
}

Integer IntegerSeries::coeff(std::int64_t n) const
{
    if (n < 0 || static_cast<std::uint64_t>(n) > order()) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(n)];
}

IntegerSeries& IntegerSeries::operator+=(const IntegerSeries& other)
{
    require_same_order(*this, other, "add");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

IntegerSeries& IntegerSeries::operator-=(const IntegerSeries& other)
{
    require_same_order(*this, other, "subtract");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

IntegerSeries& IntegerSeries::operator*=(const Integer& factor)
{
    for (auto& c : coeffs_) {
        c *= factor;
    }
    return *this;
}

IntegerSeries& IntegerSeries::operator*=(const IntegerSeries& other)
{
    *this = series_mul(*this, other);
    return *this;
}

IntegerSeries IntegerSeries::operator-() const
{
    IntegerSeries r(*this);
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

IntegerSeries& IntegerSeries::add_term(std::int64_t exponent, const Integer& coeff)
{
    if (exponent < 0) {
        throw DomainError("negative exponent " + std::to_string(exponent));
    }
    if (static_cast<std::uint64_t>(exponent) <= order()) {
        coeffs_[static_cast<std::size_t>(exponent)] += coeff;
    }
    return *this;
}

IntegerSeries& IntegerSeries::mul_binomial(std::int64_t m, int sign)
{
    if (m < 0) {
        throw DomainError("negative exponent in binomial factor");
    }
    if (m == 0) {
        return *this *= Integer(1 + sign);
    }
    const auto step = static_cast<std::size_t>(m);
    if (step > order()) {
        return *this;
    }
    // Descending so c[n - m] is still the old value.
    for (std::size_t n = order(); n >= step; --n) {
        if (sign > 0) {
            coeffs_[n] += coeffs_[n - step];
        } else {
            coeffs_[n] -= coeffs_[n - step];
        }
    }
    return *this;
}

IntegerSeries& IntegerSeries::div_binomial(std::int64_t m, int sign)
{
    if (m <= 0) {
        throw NonInvertibleError("division by (1 +- q^m) requires m >= 1");
    }
    const auto step = static_cast<std::size_t>(m);
    for (std::size_t n = step; n <= order(); ++n) {
        if (sign > 0) {
            coeffs_[n] -= coeffs_[n - step];
        } else {
            coeffs_[n] += coeffs_[n - step];
        }
    }
    return *this;
}

IntegerSeries IntegerSeries::shifted(std::int64_t e) const
{
    if (e < 0) {
        throw DomainError("negative shift");
    }
    IntegerSeries r(order());
    const auto shift = static_cast<std::size_t>(e);
    for (std::size_t n = shift; n <= order(); ++n) {
        r.coeffs_[n] = coeffs_[n - shift];
    }
    return r;
}

bool IntegerSeries::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

IntegerSeries operator+(IntegerSeries lhs, const IntegerSeries& rhs)
{
    lhs += rhs;
    return lhs;
}

IntegerSeries operator-(IntegerSeries lhs, const IntegerSeries& rhs)
{
    lhs -= rhs;
    return lhs;
}

IntegerSeries operator*(IntegerSeries lhs, const Integer& rhs)
{
    lhs *= rhs;
    return lhs;
}

IntegerSeries series_mul(const IntegerSeries& s, const IntegerSeries& t)
{
    require_same_order(s, t, "multiply");
    const std::size_t order = s.order();

    // Iterate over the sparser operand.
    auto nonzeros = [](const IntegerSeries& x) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] != 0) {
                idx.push_back(i);
            }
        }
        return idx;
    };
    auto ns = nonzeros(s);
    auto nt = nonzeros(t);
    const bool swap = nt.size() < ns.size();
    const IntegerSeries& sparse = swap ? t : s;
    const IntegerSeries& dense = swap ? s : t;
    const auto& idx = swap ? nt : ns;

    IntegerSeries r(order);
    for (std::size_t i : idx) {
        const Integer& a = sparse[i];
        for (std::size_t j = 0; i + j <= order; ++j) {
            if (dense[j] != 0) {
                mpz_addmul(r[i + j].get_mpz_t(), a.get_mpz_t(), dense[j].get_mpz_t());
            }
        }
    }
    return r;
}

IntegerSeries operator*(const IntegerSeries& s, const IntegerSeries& t)
{
    return series_mul(s, t);
}

IntegerSeries series_invert(const IntegerSeries& s)
{
    if (s[0] != 1 && s[0] != -1) {
        throw NonInvertibleError("constant term " + s[0].get_str() + " is not a unit");
    }
    const bool negative = s[0] < 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] != 0) {
            idx.push_back(i);
        }
    }

    IntegerSeries t(s.order());
    t[0] = s[0];
    Integer acc;
    for (std::size_t n = 1; n <= s.order(); ++n) {
        acc = 0;
        for (std::size_t i : idx) {
            if (i > n) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), s[i].get_mpz_t(), t[n - i].get_mpz_t());
        }
        // t_n = -(1/s_0) * acc with 1/s_0 = s_0.
        t[n] = negative ? Integer(acc) : Integer(-acc);
    }
    return t;
}

std::optional<std::size_t> first_mismatch(const IntegerSeries& a, const IntegerSeries& b)
{
    require_same_order(a, b, "compare");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            return i;
        }
    }
    return std::nullopt;
}

MinCoefficient min_coefficient(const IntegerSeries& s, std::size_t from)
{
    MinCoefficient m;
    if (from > s.order()) {
        throw DomainError("min_coefficient: start beyond order");
    }
    m.value = s[from];
    m.at = from;
    for (std::size_t i = from + 1; i < s.size(); ++i) {
        if (s[i] < m.value) {
            m.value = s[i];
            m.at = i;
        }
    }
    return m;
}

std::string digest(const IntegerSeries& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](char ch) {
        h ^= static_cast<unsigned char>(ch);
        h *= 0x100000001b3ULL;
    };
    for (const auto& c : s.coeffs()) {
        for (char ch : c.get_str()) {
            mix(ch);
        }
        mix(',');
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

std::string to_string(const IntegerSeries& s, std::size_t max_terms)
{
    std::ostringstream os;
    std::size_t written = 0;
    for (std::size_t n = 0; n < s.size(); ++n) {
        const Integer& c = s[n];
        if (c == 0) {
            continue;
        }
        if (written == max_terms) {
            os << " + ...";
            return os.str();
        }
        Integer mag = abs(c);
        if (written == 0) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (n == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (n >= 1) {
            os << "q";
            if (n >= 2) {
                os << "^" << n;
            }
        }
        ++written;
    }
    if (written == 0) {
        return "0";
    }
    return os.str();
}

} // namespace qpos
