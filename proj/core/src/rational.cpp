#include "qpos/rational.hpp"

#include <cctype>
#include <limits>

#include "qpos/errors.hpp"

namespace qpos {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational make_rational(std::int64_t num, std::int64_t den)
{
    return make_rational(Integer(std::to_string(num)), Integer(std::to_string(den)));
}

bool is_integer(const Rational& x)
{
    return x.get_den() == 1;
}

Integer ceil(const Rational& x)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

std::string to_string(const Rational& x)
{
    return x.get_str();
}

std::string to_string(const Integer& x)
{
    return x.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (std::isdigit(static_cast<unsigned char>(ch)) == 0) {
            return false;
        }
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole)
{
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw DomainError("malformed number '" + std::string(whole) + "'");
    }
    Integer v{std::string(s)};
    return negative ? Integer(-v) : v;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())) != 0) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())) != 0) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw DomainError("empty number");
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), text);
        std::string_view den_text = text.substr(slash + 1);
        if (!all_digits(den_text)) {
            throw DomainError("malformed denominator in '" + std::string(text) + "'");
        }
        return make_rational(num, Integer(std::string(den_text)));
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        std::string_view whole = text.substr(0, dot);
        bool negative = !whole.empty() && whole.front() == '-';
        Integer ip = parse_integer(whole, text);
        if (frac == "0") {
            return Rational(ip);
        }
        if (frac != "5") {
            throw DomainError("only integer or half-integer decimals are accepted, got '" +
                              std::string(text) + "'");
        }
        Integer twice = 2 * ip + (negative ? -1 : 1);
        return make_rational(twice, Integer(2));
    }

    return Rational(parse_integer(text, text));
}

std::int64_t to_int64(const Integer& x)
{
    if (!x.fits_slong_p()) {
        throw DomainError("integer " + x.get_str() + " does not fit in 64 bits");
    }
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return static_cast<std::int64_t>(x.get_si());
}

} // namespace qpos
