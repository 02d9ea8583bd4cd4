#pragma once

#include "enumstat/rational.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string_view>

namespace enumstat {

/// The three axes of the enumerator, in canonical order.
enum class Variable : std::size_t { A = 0, P = 1, C = 2 };

inline constexpr std::array<Variable, 3> kVariables{Variable::A, Variable::P, Variable::C};

[[nodiscard]] char variable_symbol(Variable v) noexcept;
[[nodiscard]] std::string_view variable_name(Variable v) noexcept;

/// A value per variable, indexed by Variable. Used for exponent vectors,
/// evaluation points and exponent shifts alike.
using RationalVector = std::array<Rational, 3>;

[[nodiscard]] inline const Rational& at(const RationalVector& v, Variable var)
{
    return v[static_cast<std::size_t>(var)];
}

[[nodiscard]] inline Rational& at(RationalVector& v, Variable var)
{
    return v[static_cast<std::size_t>(var)];
}

/// a^e_a p^e_p c^e_c with exact rational exponents; a zero entry means the
/// variable is absent.
class Monomial {
public:
    Monomial() : exponents_{Rational(0), Rational(0), Rational(0)} {}
    explicit Monomial(RationalVector exponents) : exponents_(std::move(exponents)) {}
    Monomial(const Rational& a, const Rational& p, const Rational& c) : exponents_{a, p, c} {}

    [[nodiscard]] const Rational& exponent(Variable v) const { return at(exponents_, v); }
    [[nodiscard]] const RationalVector& exponents() const noexcept { return exponents_; }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] bool has_integer_exponents() const;

    /// Subtracts `shifts` from the exponent vector.
    [[nodiscard]] Monomial shifted_down(const RationalVector& shifts) const;

    friend bool operator==(const Monomial& x, const Monomial& y);
    friend bool operator<(const Monomial& x, const Monomial& y);

private:
    RationalVector exponents_;
};

/// Sparse polynomial in a, p, c with exact rational coefficients.
/// Zero coefficients are never stored, so two equal polynomials have
/// identical term maps regardless of how they were built.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;

    [[nodiscard]] static Polynomial constant(const Rational& value);
    [[nodiscard]] static Polynomial term(const Rational& coefficient, const Monomial& monomial);

    /// Adds coeff * monomial into this polynomial, dropping the term if the
    /// result cancels.
    void add_term(const Rational& coefficient, const Monomial& monomial);

    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool has_integer_exponents() const;

    /// Largest / smallest exponent of `v` over all terms. Throws
    /// ContractError on the zero polynomial.
    [[nodiscard]] Rational degree(Variable v) const;
    [[nodiscard]] Rational min_degree(Variable v) const;

    /// Value at (1,1,1), i.e. the sum of coefficients. Defined for any
    /// exponents.
    [[nodiscard]] Rational value_at_ones() const;

    /// Exact value at `point`. Fractional exponents are only allowed when
    /// the matching coordinate is 1; otherwise DomainError("irrational power").
    [[nodiscard]] Rational evaluate(const RationalVector& point) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    TermMap terms_;
};

[[nodiscard]] Polynomial operator+(const Polynomial& x, const Polynomial& y);
[[nodiscard]] Polynomial operator-(const Polynomial& x, const Polynomial& y);
[[nodiscard]] Polynomial scale(const Polynomial& x, const Rational& k);

/// Euler operator v * d/dv: each coefficient is multiplied by the term's
/// v-exponent; terms without v vanish.
[[nodiscard]] Polynomial euler_derivative(const Polynomial& x, Variable v);

/// Applies the Euler operator `power` times for v.
[[nodiscard]] Polynomial euler_derivative(const Polynomial& x, Variable v, unsigned power);

/// Divides by a^sa p^sp c^sc: every exponent vector is shifted down by
/// `shifts`, coefficients unchanged.
[[nodiscard]] Polynomial center_exponents(const Polynomial& x, const RationalVector& shifts);

/// (1, 1, 1)
[[nodiscard]] RationalVector unit_point();

}  // namespace enumstat
