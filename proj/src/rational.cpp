#include "enumstat/rational.hpp"

#include "enumstat/errors.hpp"

#include <cctype>
#include <limits>

namespace enumstat {

Rational make_rational(const Integer& num, const Integer& den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", 0);
    if (negative) n = -n;
    return make_rational(n, d);
}

Rational parse_decimal(std::string_view text)
{
    std::string_view body = text;
    bool negative = !body.empty() && body.front() == '-';
    if (negative) body.remove_prefix(1);
    auto point = body.find('.');
    std::string_view whole = body.substr(0, point);
    std::string_view frac = point == std::string_view::npos ? std::string_view() : body.substr(point + 1);
    if (!all_digits(whole) || (point != std::string_view::npos && !all_digits(frac)))
        throw ParseError("malformed decimal '" + std::string(text) + "'", 0);
    Integer num(std::string(whole) + std::string(frac), 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    if (negative) num = -num;
    return make_rational(num, den);
}

Rational pow(const Rational& q, unsigned long k)
{
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), q.get_den_mpz_t(), k);
    return make_rational(n, d);
}

Rational pow(const Rational& q, const Integer& e)
{
    if (!e.fits_slong_p()) throw DomainError("exponent out of range");
    long k = e.get_si();
    if (k >= 0) return pow(q, static_cast<unsigned long>(k));
    if (q == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / q, static_cast<unsigned long>(-k));
}

}  // namespace enumstat
