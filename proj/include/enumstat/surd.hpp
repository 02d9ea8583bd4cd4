#pragma once

#include "enumstat/rational.hpp"

#include <optional>
#include <string>

namespace enumstat {

/// An exact real of the form sign * sqrt(radicand), radicand a non-negative
/// rational. Every statistic reported here is of this shape: means are
/// rationals, standard deviations are square roots of rationals, and a
/// standardized moment M / (var_a^(r/2) var_p^(s/2) var_c^(t/2)) squares to
/// the rational M^2 / (var_a^r var_p^s var_c^t).
///
/// Decimal renderings are computed from the exact value, so they are
/// correctly rounded (half-to-even) at any requested precision.
class Surd {
public:
    Surd() = default;

    [[nodiscard]] static Surd exact(const Rational& value);
    /// sqrt(x); DomainError when x < 0.
    [[nodiscard]] static Surd root(const Rational& x);
    /// sign * sqrt(x) with sign in {-1, 0, 1}; DomainError when x < 0.
    [[nodiscard]] static Surd signed_root(int sign, const Rational& x);

    [[nodiscard]] int sign() const noexcept { return sign_; }
    [[nodiscard]] const Rational& radicand() const noexcept { return radicand_; }
    [[nodiscard]] Rational square() const { return radicand_; }

    /// The value as a rational when the radicand is a perfect square.
    [[nodiscard]] std::optional<Rational> exact_value() const;

    /// <0, 0, >0 as this is less than, equal to, greater than q. Exact.
    [[nodiscard]] int compare(const Rational& q) const;

    /// Round half-to-even to `decimals` places after the point.
    [[nodiscard]] std::string to_fixed(int decimals) const;

    /// Round half-to-even to `digits` significant digits (digits >= 1).
    [[nodiscard]] std::string to_significant(int digits) const;

    /// Like to_fixed(), except that a value whose exact decimal expansion
    /// stops within `decimals` places is printed without padding zeros
    /// ("0", "1", "0.5").
    [[nodiscard]] std::string to_display(int decimals) const;

    /// "n/d" when rational, otherwise "sqrt(n/d)" or "-sqrt(n/d)".
    [[nodiscard]] std::string exact_string() const;

    [[nodiscard]] double to_double() const;

    friend bool operator==(const Surd& x, const Surd& y)
    {
        return x.sign_ == y.sign_ && x.radicand_ == y.radicand_;
    }

private:
    Surd(int sign, Rational radicand) : sign_(sign), radicand_(std::move(radicand)) {}

    /// round(|value| * 10^decimals), half-to-even; decimals may be negative.
    [[nodiscard]] Integer rounded_scaled_magnitude(int decimals) const;
    /// floor(log10(|value|)) for a nonzero value.
    [[nodiscard]] long floor_log10() const;
    [[nodiscard]] std::string format_scaled(const Integer& magnitude, int decimals) const;

    int sign_ = 0;
    Rational radicand_ = 0;
};

}  // namespace enumstat
