#include "enumstat/report.hpp"

#include "enumstat/errors.hpp"
#include "enumstat/poly_text.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace enumstat {

using ordered_json = nlohmann::ordered_json;

std::int64_t axis_value(const FellowRecord& record, Variable axis)
{
    switch (axis) {
        case Variable::A: return record.age;
        case Variable::P: return record.publications;
        case Variable::C: return record.citations;
    }
    return 0;
}

namespace {

Variable tie_axis(Variable key)
{
    return key == Variable::P ? Variable::C : Variable::P;
}

}  // namespace

Ranking rank_records(const Corpus& corpus, Variable key)
{
    std::vector<FellowRecord> sorted = corpus.records;
    const Variable tie = tie_axis(key);
    std::stable_sort(sorted.begin(), sorted.end(), [&](const FellowRecord& x, const FellowRecord& y) {
        if (axis_value(x, key) != axis_value(y, key)) return axis_value(x, key) > axis_value(y, key);
        if (axis_value(x, tie) != axis_value(y, tie)) return axis_value(x, tie) < axis_value(y, tie);
        return x.name < y.name;
    });

    Ranking ranking;
    ranking.key = key;
    ranking.entries.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) ranking.entries.push_back({i + 1, std::move(sorted[i])});
    return ranking;
}

Ranking grouped_age_listing(const Corpus& corpus)
{
    Ranking ranking = rank_records(corpus, Variable::A);
    for (const auto& entry : ranking.entries) {
        if (ranking.groups.empty() || ranking.groups.back().age != entry.record.age)
            ranking.groups.push_back({entry.record.age, {}});
        ranking.groups.back().members.push_back(entry.record);
    }
    return ranking;
}

std::string ranking_text(const Ranking& ranking)
{
    std::ostringstream out;
    if (!ranking.groups.empty()) {
        bool first = true;
        for (const auto& group : ranking.groups) {
            if (!first) out << '\n';
            first = false;
            const auto n = group.members.size();
            out << (n == 1 ? "There was 1 fellow" : "There were " + std::to_string(n) + " fellows")
                << " who died at the age of " << group.age << '\n';
            for (const auto& r : group.members) out << "    " << render_record_line(r) << '\n';
        }
        return out.str();
    }
    for (const auto& e : ranking.entries) out << e.rank << ".  " << render_record_line(e.record) << '\n';
    return out.str();
}

std::string ranking_json(const Ranking& ranking)
{
    ordered_json list = ordered_json::array();
    for (const auto& e : ranking.entries) {
        list.push_back({{"rank", e.rank},
                        {"name", e.record.name},
                        {"birth", e.record.birth_year},
                        {"death", e.record.death_year},
                        {"age", e.record.age},
                        {"publications", e.record.publications},
                        {"citations", e.record.citations}});
    }
    return list.dump(2) + "\n";
}

const std::vector<PublishedValue>& published_theorem_values()
{
    static const std::vector<PublishedValue> values{
        {"age.mean", "83.3655", 4},
        {"age.std_dev", "9.343", 3},
        {"age.skewness", "-1.079", 3},
        {"age.kurtosis", "4.3277", 4},
        {"publications.mean", "98.531", 3},
        {"publications.std_dev", "73.942", 3},
        {"publications.skewness", "1.757", 3},
        {"publications.kurtosis", "7.1779", 4},
        {"citations.mean", "2473.234", 3},
        {"citations.std_dev", "3455.194", 3},
        {"citations.skewness", "3.97", 2},
        {"citations.kurtosis", "23.993", 3},
        {"correlations.age_pub", "0.003", 3},
        {"correlations.age_cit", "0.011", 3},
        {"correlations.pub_cit", "0.57973", 5},
    };
    return values;
}

const Surd& summary_value(const StatsSummary& summary, const std::string& key)
{
    auto dot = key.find('.');
    std::string group = key.substr(0, dot);
    std::string field = dot == std::string::npos ? std::string() : key.substr(dot + 1);
    if (group == "correlations") {
        if (field == "age_pub") return summary.correlations.age_pub;
        if (field == "age_cit") return summary.correlations.age_cit;
        if (field == "pub_cit") return summary.correlations.pub_cit;
    } else {
        for (Variable v : kVariables) {
            if (group != variable_name(v)) continue;
            const AxisStats& axis = summary.axis(v);
            if (field == "mean") return axis.mean;
            if (field == "std_dev") return axis.std_dev;
            if (field == "skewness") return axis.skewness;
            if (field == "kurtosis") return axis.kurtosis;
        }
    }
    throw ContractError("unknown statistic '" + key + "'");
}

namespace {

int published_decimals(const std::string& key)
{
    for (const auto& p : published_theorem_values())
        if (p.key == key) return p.decimals;
    throw ContractError("unknown statistic '" + key + "'");
}

std::string render(const StatsSummary& summary, const std::string& key, Display display)
{
    const Surd& value = summary_value(summary, key);
    if (display == Display::full) return value.to_significant(summary.precision);
    return value.to_display(published_decimals(key));
}

constexpr std::array<const char*, 4> kAxisFields{"mean", "std_dev", "skewness", "kurtosis"};
constexpr std::array<const char*, 3> kCorrelationFields{"age_pub", "age_cit", "pub_cit"};

std::string axis_label(Variable v)
{
    switch (v) {
        case Variable::A: return "Age at death";
        case Variable::P: return "Publications";
        case Variable::C: return "Citations";
    }
    return "";
}

}  // namespace

std::string theorem_report(const StatsSummary& summary, ReportFormat format, Display display, bool with_exact)
{
    if (format == ReportFormat::json) {
        ordered_json doc;
        for (Variable v : kVariables) {
            ordered_json axis;
            for (const char* field : kAxisFields)
                axis[field] = render(summary, std::string(variable_name(v)) + "." + field, display);
            doc[std::string(variable_name(v))] = axis;
        }
        ordered_json corr;
        for (const char* field : kCorrelationFields)
            corr[field] = render(summary, std::string("correlations.") + field, display);
        doc["correlations"] = corr;
        doc["population"] = summary.population();
        doc["precision"] = summary.precision;
        doc["display"] = display == Display::full ? "full" : "published";
        if (with_exact) {
            ordered_json exact;
            for (Variable v : kVariables)
                exact["means"][std::string(variable_name(v))] = to_string(at(summary.moments.means, v));
            for (const auto& [idx, value] : summary.moments.central) {
                exact["central"][std::to_string(idx.r) + "," + std::to_string(idx.s) + "," + std::to_string(idx.t)] =
                    to_string(value);
            }
            doc["exact"] = exact;
        }
        return doc.dump(2) + "\n";
    }

    std::ostringstream out;
    out << "Population: " << summary.population() << '\n';
    for (Variable v : kVariables) {
        std::string prefix = std::string(variable_name(v)) + ".";
        out << axis_label(v) << ": mean " << render(summary, prefix + "mean", display) << ", standard deviation "
            << render(summary, prefix + "std_dev", display) << ", skewness "
            << render(summary, prefix + "skewness", display) << ", kurtosis "
            << render(summary, prefix + "kurtosis", display) << '\n';
    }
    out << "Correlations: age-publications " << render(summary, "correlations.age_pub", display)
        << ", age-citations " << render(summary, "correlations.age_cit", display) << ", publications-citations "
        << render(summary, "correlations.pub_cit", display) << '\n';
    if (with_exact) {
        out << "Exact means: age " << to_string(at(summary.moments.means, Variable::A)) << ", publications "
            << to_string(at(summary.moments.means, Variable::P)) << ", citations "
            << to_string(at(summary.moments.means, Variable::C)) << '\n';
        out << "Exact central moments:\n";
        for (const auto& [idx, value] : summary.moments.central)
            out << "  M" << to_string(idx) << " = " << to_string(value) << '\n';
    }
    return out.str();
}

std::string lemma_listing(const Polynomial& enumerator)
{
    if (!enumerator.has_integer_exponents()) throw ContractError("lemma listing needs integer exponents");
    return print_canonical(enumerator);
}

std::vector<TheoremCheck> check_theorem_values(const StatsSummary& summary)
{
    std::vector<TheoremCheck> out;
    for (const auto& published : published_theorem_values()) {
        const Surd& value = summary_value(summary, published.key);
        Rational expected = parse_decimal(published.text);
        Rational slack = make_rational(2, pow(Rational(10), static_cast<unsigned long>(published.decimals)).get_num());
        bool ok = value.compare(expected - slack) >= 0 && value.compare(expected + slack) <= 0;
        out.push_back({published, value.to_fixed(published.decimals), ok});
    }
    return out;
}

}  // namespace enumstat
