#pragma once

#include "enumstat/corpus.hpp"
#include "enumstat/polynomial.hpp"
#include "enumstat/surd.hpp"

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace enumstat {

/// Powers (r, s, t) of the Euler operators on a, p, c.
struct MultiIndex {
    unsigned r = 0;
    unsigned s = 0;
    unsigned t = 0;

    [[nodiscard]] unsigned order() const noexcept { return r + s + t; }
    [[nodiscard]] unsigned component(Variable v) const noexcept;

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

[[nodiscard]] std::string to_string(const MultiIndex& idx);

/// Every index with r+s+t <= max_order, by increasing order and then
/// decreasing r, s. There are (max_order+3 choose 3) of them.
[[nodiscard]] std::vector<MultiIndex> indices_up_to(unsigned max_order);

inline constexpr unsigned kDefaultMaxOrder = 4;
inline constexpr int kDefaultPrecision = 50;

struct MomentTable {
    RationalVector means;
    std::map<MultiIndex, Rational> central;
    std::size_t population_size = 0;

    /// Throws ContractError when idx was not computed.
    [[nodiscard]] const Rational& at(const MultiIndex& idx) const;
    [[nodiscard]] const Rational& variance(Variable v) const;
};

/// E[age^r pub^s cit^t], read off the normalized enumerator f as
/// (a d/da)^r (p d/dp)^s (c d/dc)^t f at (1,1,1).
/// f must have integer exponents and f(1,1,1) == 1 (ContractError otherwise).
[[nodiscard]] Rational raw_moment(const Polynomial& f, const MultiIndex& idx);

/// (mu_age, mu_pub, mu_cit), the first raw moments.
[[nodiscard]] RationalVector mean_vector(const Polynomial& f);

/// Central moment through the generating function: shift every exponent of
/// f down by the means, apply the Euler operators, evaluate at (1,1,1).
[[nodiscard]] Rational central_moment_operator(const Polynomial& f, const MultiIndex& idx);

/// Central moment from its definition, (1/N) sum of centered products.
/// ContractError on an empty corpus.
[[nodiscard]] Rational central_moment_direct(const Corpus& corpus, const MultiIndex& idx);

/// Operator-path central moments for every index up to max_order. The
/// normalized enumerator does not determine N, so population_size is left 0.
[[nodiscard]] MomentTable moment_table(const Polynomial& f, unsigned max_order = kDefaultMaxOrder);

/// Direct-definition central moments for every index up to max_order.
[[nodiscard]] MomentTable moment_table_direct(const Corpus& corpus, unsigned max_order = kDefaultMaxOrder);

/// M_{r,s,t} / (M200^(r/2) M020^(s/2) M002^(t/2)), held exactly.
/// DegenerateDistributionError when an axis with a nonzero index component
/// has zero variance.
[[nodiscard]] Surd scaled_moment(const MomentTable& table, const MultiIndex& idx);

/// scaled_moment() rendered to `precision` significant digits (>= 10).
[[nodiscard]] std::string scaled_moment(const MomentTable& table, const MultiIndex& idx, int precision);

struct AxisStats {
    Surd mean;
    Surd std_dev;
    Surd skewness;
    Surd kurtosis;  // raw fourth standardized moment, not excess
};

struct Correlations {
    Surd age_pub;
    Surd age_cit;
    Surd pub_cit;
};

struct StatsSummary {
    std::array<AxisStats, 3> axes;  // indexed by Variable
    Correlations correlations;
    MomentTable moments;
    int precision = kDefaultPrecision;

    [[nodiscard]] const AxisStats& axis(Variable v) const { return axes[static_cast<std::size_t>(v)]; }
    [[nodiscard]] std::size_t population() const noexcept { return moments.population_size; }
};

/// Mean, standard deviation, skewness and kurtosis per axis plus the three
/// pairwise correlations, all computed through the enumerator.
/// Needs at least two records and positive variance on every axis.
[[nodiscard]] StatsSummary stats_summary(const Corpus& corpus, int precision = kDefaultPrecision);

using CentralMomentFn = std::function<Rational(const Polynomial& f, const MultiIndex& idx)>;

struct MomentCheck {
    MultiIndex index;
    Rational operator_value;
    Rational direct_value;
    bool passed = false;
};

struct VerificationReport {
    std::vector<MomentCheck> checks;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] bool all_passed() const { return passed() == checks.size(); }
    [[nodiscard]] std::vector<MultiIndex> failures() const;
};

/// Cross-checks the operator path against the direct definition for every
/// index up to max_order (>= 2). `operator_path` is replaceable so a
/// corrupted implementation can be fed through the same harness.
[[nodiscard]] VerificationReport verify_moments(const Corpus& corpus, unsigned max_order = kDefaultMaxOrder,
                                                const CentralMomentFn& operator_path = central_moment_operator);

}  // namespace enumstat
