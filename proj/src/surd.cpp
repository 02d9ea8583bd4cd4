#include "enumstat/surd.hpp"

#include "enumstat/errors.hpp"

#include <cmath>

namespace enumstat {

namespace {

Integer power_of_ten(unsigned long k)
{
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
    return out;
}

Integer isqrt(const Integer& n)
{
    Integer out;
    mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
    return out;
}

bool is_perfect_square(const Integer& n)
{
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace

Surd Surd::exact(const Rational& value)
{
    return Surd(sgn(value), value * value);
}

Surd Surd::root(const Rational& x)
{
    return signed_root(1, x);
}

Surd Surd::signed_root(int sign, const Rational& x)
{
    if (x < 0) throw DomainError("square root of a negative rational");
    if (x == 0 || sign == 0) return Surd(0, Rational(0));
    return Surd(sign > 0 ? 1 : -1, x);
}

std::optional<Rational> Surd::exact_value() const
{
    if (!is_perfect_square(radicand_.get_num()) || !is_perfect_square(radicand_.get_den())) return std::nullopt;
    Rational root = make_rational(isqrt(radicand_.get_num()), isqrt(radicand_.get_den()));
    return sign_ < 0 ? Rational(-root) : root;
}

int Surd::compare(const Rational& q) const
{
    int qs = sgn(q);
    if (sign_ != qs) return sign_ < qs ? -1 : 1;
    if (sign_ == 0) return 0;
    int c = cmp(radicand_, Rational(q * q));
    return sign_ > 0 ? c : -c;
}

Integer Surd::rounded_scaled_magnitude(int decimals) const
{
    // |value| * 10^decimals = sqrt(n / d) with the scaling folded in.
    Integer n = radicand_.get_num();
    Integer d = radicand_.get_den();
    if (decimals >= 0)
        n *= power_of_ten(2UL * static_cast<unsigned long>(decimals));
    else
        d *= power_of_ten(2UL * static_cast<unsigned long>(-decimals));

    Integer quotient = n / d;
    Integer floor_root = isqrt(quotient);
    // Compare sqrt(n/d) with floor_root + 1/2, i.e. 4n with (2*floor_root + 1)^2 * d.
    Integer twice_plus_one = 2 * floor_root + 1;
    Integer lhs = 4 * n;
    Integer rhs = twice_plus_one * twice_plus_one * d;
    int c = cmp(lhs, rhs);
    if (c > 0 || (c == 0 && mpz_odd_p(floor_root.get_mpz_t()))) return floor_root + 1;
    return floor_root;
}

long Surd::floor_log10() const
{
    const Integer& n = radicand_.get_num();
    const Integer& d = radicand_.get_den();
    long estimate = (static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10)) -
                     static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 10))) /
                    2;
    // 10^(2e) <= radicand < 10^(2e+2)
    auto below = [&](long e) {
        Rational bound = e >= 0 ? Rational(power_of_ten(2UL * static_cast<unsigned long>(e)))
                                : make_rational(1, power_of_ten(2UL * static_cast<unsigned long>(-e)));
        return radicand_ < bound;
    };
    while (below(estimate)) --estimate;
    while (!below(estimate + 1)) ++estimate;
    return estimate;
}

std::string Surd::format_scaled(const Integer& magnitude, int decimals) const
{
    std::string digits = magnitude.get_str();
    std::string out = (sign_ < 0 && magnitude != 0) ? "-" : "";
    if (decimals <= 0) {
        out += digits;
        if (magnitude != 0) out.append(static_cast<std::size_t>(-decimals), '0');
        return out;
    }
    auto width = static_cast<std::size_t>(decimals);
    if (digits.size() <= width) digits.insert(0, width + 1 - digits.size(), '0');
    out += digits.substr(0, digits.size() - width);
    out += '.';
    out += digits.substr(digits.size() - width);
    return out;
}

std::string Surd::to_fixed(int decimals) const
{
    return format_scaled(rounded_scaled_magnitude(decimals), decimals);
}

std::string Surd::to_significant(int digits) const
{
    if (digits < 1) throw ContractError("significant digits must be positive");
    if (sign_ == 0) return "0";
    long lead = floor_log10();
    auto decimals = static_cast<int>(digits - 1 - lead);
    return format_scaled(rounded_scaled_magnitude(decimals), decimals);
}

std::string Surd::to_display(int decimals) const
{
    if (auto q = exact_value()) {
        // Terminates within `decimals` places iff den divides 10^decimals.
        for (int k = 0; k <= decimals; ++k) {
            Integer scaled = q->get_num() * power_of_ten(static_cast<unsigned long>(k));
            if (mpz_divisible_p(scaled.get_mpz_t(), q->get_den_mpz_t())) return to_fixed(k);
        }
    }
    return to_fixed(decimals);
}

std::string Surd::exact_string() const
{
    if (auto q = exact_value()) return to_string(*q);
    return std::string(sign_ < 0 ? "-" : "") + "sqrt(" + to_string(radicand_) + ")";
}

double Surd::to_double() const
{
    return sign_ * std::sqrt(radicand_.get_d());
}

}  // namespace enumstat
