#include "enumstat/polynomial.hpp"

#include "enumstat/errors.hpp"

#include <algorithm>

namespace enumstat {

char variable_symbol(Variable v) noexcept
{
    switch (v) {
        case Variable::A: return 'a';
        case Variable::P: return 'p';
        case Variable::C: return 'c';
    }
    return '?';
}

std::string_view variable_name(Variable v) noexcept
{
    switch (v) {
        case Variable::A: return "age";
        case Variable::P: return "publications";
        case Variable::C: return "citations";
    }
    return "?";
}

bool Monomial::is_constant() const
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](const Rational& e) { return e == 0; });
}

bool Monomial::has_integer_exponents() const
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](const Rational& e) { return is_integer(e); });
}

Monomial Monomial::shifted_down(const RationalVector& shifts) const
{
    RationalVector e = exponents_;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= shifts[i];
    return Monomial(std::move(e));
}

bool operator==(const Monomial& x, const Monomial& y)
{
    return x.exponents_ == y.exponents_;
}

bool operator<(const Monomial& x, const Monomial& y)
{
    for (std::size_t i = 0; i < x.exponents_.size(); ++i) {
        int c = cmp(x.exponents_[i], y.exponents_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Polynomial Polynomial::constant(const Rational& value)
{
    return term(value, Monomial());
}

Polynomial Polynomial::term(const Rational& coefficient, const Monomial& monomial)
{
    Polynomial p;
    p.add_term(coefficient, monomial);
    return p;
}

void Polynomial::add_term(const Rational& coefficient, const Monomial& monomial)
{
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
}

bool Polynomial::has_integer_exponents() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.has_integer_exponents(); });
}

Rational Polynomial::degree(Variable v) const
{
    if (terms_.empty()) throw ContractError("degree of the zero polynomial");
    Rational best = terms_.begin()->first.exponent(v);
    for (const auto& [m, coeff] : terms_) best = std::max(best, m.exponent(v));
    return best;
}

Rational Polynomial::min_degree(Variable v) const
{
    if (terms_.empty()) throw ContractError("degree of the zero polynomial");
    Rational best = terms_.begin()->first.exponent(v);
    for (const auto& [m, coeff] : terms_) best = std::min(best, m.exponent(v));
    return best;
}

Rational Polynomial::value_at_ones() const
{
    Rational sum = 0;
    for (const auto& [m, coeff] : terms_) sum += coeff;
    return sum;
}

Rational Polynomial::evaluate(const RationalVector& point) const
{
    Rational sum = 0;
    for (const auto& [m, coeff] : terms_) {
        Rational value = coeff;
        for (Variable v : kVariables) {
            const Rational& e = m.exponent(v);
            const Rational& x = at(point, v);
            if (e == 0 || x == 1) continue;
            if (!is_integer(e)) throw DomainError("irrational power: fractional exponent at a point other than 1");
            value *= pow(x, e.get_num());
        }
        sum += value;
    }
    return sum;
}

Polynomial operator+(const Polynomial& x, const Polynomial& y)
{
    Polynomial out = x;
    for (const auto& [m, coeff] : y.terms()) out.add_term(coeff, m);
    return out;
}

Polynomial operator-(const Polynomial& x, const Polynomial& y)
{
    Polynomial out = x;
    for (const auto& [m, coeff] : y.terms()) out.add_term(-coeff, m);
    return out;
}

Polynomial scale(const Polynomial& x, const Rational& k)
{
    Polynomial out;
    for (const auto& [m, coeff] : x.terms()) out.add_term(coeff * k, m);
    return out;
}

Polynomial euler_derivative(const Polynomial& x, Variable v)
{
    Polynomial out;
    for (const auto& [m, coeff] : x.terms()) out.add_term(coeff * m.exponent(v), m);
    return out;
}

Polynomial euler_derivative(const Polynomial& x, Variable v, unsigned power)
{
    Polynomial out;
    for (const auto& [m, coeff] : x.terms()) out.add_term(coeff * pow(m.exponent(v), power), m);
    return out;
}

Polynomial center_exponents(const Polynomial& x, const RationalVector& shifts)
{
    Polynomial out;
    for (const auto& [m, coeff] : x.terms()) out.add_term(coeff, m.shifted_down(shifts));
    return out;
}

RationalVector unit_point()
{
    return {Rational(1), Rational(1), Rational(1)};
}

}  // namespace enumstat
