#include "enumstat/stats.hpp"

#include "enumstat/enumerator.hpp"
#include "enumstat/errors.hpp"

#include <algorithm>

namespace enumstat {

unsigned MultiIndex::component(Variable v) const noexcept
{
    switch (v) {
        case Variable::A: return r;
        case Variable::P: return s;
        case Variable::C: return t;
    }
    return 0;
}

std::string to_string(const MultiIndex& idx)
{
    return "(" + std::to_string(idx.r) + "," + std::to_string(idx.s) + "," + std::to_string(idx.t) + ")";
}

std::vector<MultiIndex> indices_up_to(unsigned max_order)
{
    std::vector<MultiIndex> out;
    for (unsigned n = 0; n <= max_order; ++n)
        for (unsigned r = n + 1; r-- > 0;)
            for (unsigned s = n - r + 1; s-- > 0;) out.push_back({r, s, n - r - s});
    return out;
}

const Rational& MomentTable::at(const MultiIndex& idx) const
{
    auto it = central.find(idx);
    if (it == central.end()) throw ContractError("moment " + to_string(idx) + " not in table");
    return it->second;
}

const Rational& MomentTable::variance(Variable v) const
{
    MultiIndex idx;
    switch (v) {
        case Variable::A: idx.r = 2; break;
        case Variable::P: idx.s = 2; break;
        case Variable::C: idx.t = 2; break;
    }
    return at(idx);
}

namespace {

void require_normalized(const Polynomial& f)
{
    if (!f.has_integer_exponents()) throw ContractError("enumerator must have integer exponents");
    if (f.value_at_ones() != 1) throw ContractError("enumerator is not normalized: f(1,1,1) != 1");
}

Rational apply_operators_at_ones(const Polynomial& x, const MultiIndex& idx)
{
    Polynomial y = euler_derivative(x, Variable::A, idx.r);
    y = euler_derivative(y, Variable::P, idx.s);
    y = euler_derivative(y, Variable::C, idx.t);
    return y.value_at_ones();
}

Rational centered_moment(const Polynomial& centered, const MultiIndex& idx)
{
    return apply_operators_at_ones(centered, idx);
}

}  // namespace

Rational raw_moment(const Polynomial& f, const MultiIndex& idx)
{
    require_normalized(f);
    return apply_operators_at_ones(f, idx);
}

RationalVector mean_vector(const Polynomial& f)
{
    require_normalized(f);
    return {apply_operators_at_ones(f, {1, 0, 0}), apply_operators_at_ones(f, {0, 1, 0}),
            apply_operators_at_ones(f, {0, 0, 1})};
}

Rational central_moment_operator(const Polynomial& f, const MultiIndex& idx)
{
    return centered_moment(center_exponents(f, mean_vector(f)), idx);
}

Rational central_moment_direct(const Corpus& corpus, const MultiIndex& idx)
{
    if (corpus.empty()) throw ContractError("central moment of an empty corpus");
    const auto n = static_cast<long>(corpus.size());
    auto value = [](const FellowRecord& r, Variable v) -> Rational {
        switch (v) {
            case Variable::A: return Integer(static_cast<long>(r.age));
            case Variable::P: return Integer(static_cast<long>(r.publications));
            case Variable::C: return Integer(static_cast<long>(r.citations));
        }
        return 0;
    };

    RationalVector mu{Rational(0), Rational(0), Rational(0)};
    for (const auto& r : corpus.records)
        for (Variable v : kVariables) at(mu, v) += value(r, v);
    for (auto& m : mu) m /= n;

    Rational sum = 0;
    for (const auto& r : corpus.records) {
        Rational product = 1;
        for (Variable v : kVariables) product *= pow(Rational(value(r, v) - at(mu, v)), idx.component(v));
        sum += product;
    }
    return sum / n;
}

MomentTable moment_table(const Polynomial& f, unsigned max_order)
{
    MomentTable table;
    table.means = mean_vector(f);
    Polynomial centered = center_exponents(f, table.means);
    for (const auto& idx : indices_up_to(max_order)) table.central.emplace(idx, centered_moment(centered, idx));
    return table;
}

MomentTable moment_table_direct(const Corpus& corpus, unsigned max_order)
{
    MomentTable table;
    table.population_size = corpus.size();
    for (const auto& idx : indices_up_to(max_order)) table.central.emplace(idx, central_moment_direct(corpus, idx));
    Polynomial f = normalize(build_enumerator(corpus));
    table.means = mean_vector(f);
    return table;
}

Surd scaled_moment(const MomentTable& table, const MultiIndex& idx)
{
    const Rational& m = table.at(idx);
    Rational denominator = 1;
    for (Variable v : kVariables) {
        unsigned k = idx.component(v);
        if (k == 0) continue;
        const Rational& var = table.variance(v);
        if (var == 0)
            throw DegenerateDistributionError("zero variance on the " + std::string(variable_name(v)) + " axis");
        denominator *= pow(var, static_cast<unsigned long>(k));
    }
    return Surd::signed_root(sgn(m), m * m / denominator);
}

std::string scaled_moment(const MomentTable& table, const MultiIndex& idx, int precision)
{
    if (precision < 10) throw ContractError("precision must be at least 10 significant digits");
    return scaled_moment(table, idx).to_significant(precision);
}

StatsSummary stats_summary(const Corpus& corpus, int precision)
{
    if (precision < 10) throw ContractError("precision must be at least 10 significant digits");
    if (corpus.size() < 2) throw ContractError("statistics need at least two records");

    StatsSummary summary;
    summary.precision = precision;
    summary.moments = moment_table(normalize(build_enumerator(corpus)), kDefaultMaxOrder);
    summary.moments.population_size = corpus.size();
    const MomentTable& table = summary.moments;

    for (Variable v : kVariables) {
        if (table.variance(v) == 0)
            throw DegenerateDistributionError("zero variance on the " + std::string(variable_name(v)) + " axis");
    }

    auto pure = [](Variable v, unsigned k) {
        MultiIndex idx;
        switch (v) {
            case Variable::A: idx.r = k; break;
            case Variable::P: idx.s = k; break;
            case Variable::C: idx.t = k; break;
        }
        return idx;
    };
    for (Variable v : kVariables) {
        auto& axis = summary.axes[static_cast<std::size_t>(v)];
        axis.mean = Surd::exact(at(table.means, v));
        axis.std_dev = Surd::root(table.variance(v));
        axis.skewness = scaled_moment(table, pure(v, 3));
        axis.kurtosis = scaled_moment(table, pure(v, 4));
    }
    summary.correlations.age_pub = scaled_moment(table, {1, 1, 0});
    summary.correlations.age_cit = scaled_moment(table, {1, 0, 1});
    summary.correlations.pub_cit = scaled_moment(table, {0, 1, 1});
    return summary;
}

std::size_t VerificationReport::passed() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
}

std::vector<MultiIndex> VerificationReport::failures() const
{
    std::vector<MultiIndex> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.index);
    return out;
}

VerificationReport verify_moments(const Corpus& corpus, unsigned max_order, const CentralMomentFn& operator_path)
{
    if (max_order < 2) throw ContractError("verification needs max_order >= 2");
    Polynomial f = normalize(build_enumerator(corpus));
    VerificationReport report;
    for (const auto& idx : indices_up_to(max_order)) {
        MomentCheck check{idx, operator_path(f, idx), central_moment_direct(corpus, idx), false};
        check.passed = check.operator_value == check.direct_value;
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace enumstat
