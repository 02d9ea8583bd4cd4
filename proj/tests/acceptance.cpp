// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include "enumstat/enumerator.hpp"
#include "enumstat/poly_text.hpp"
#include "enumstat/report.hpp"
#include "enumstat/stats.hpp"
#include "test_support.hpp"

#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace enumstat;
using enumstat::testing::data_path;
using enumstat::testing::random_corpus;
using enumstat::testing::random_polynomial;
using enumstat::testing::read_file;
using enumstat::testing::shipped_corpus;
using enumstat::testing::test_data_path;

namespace {

/// Collects failed sub-checks for one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        ++total_;
        if (!ok) failures_.push_back(what);
    }
    [[nodiscard]] bool passed() const { return failures_.empty(); }
    [[nodiscard]] std::string summary() const
    {
        std::ostringstream out;
        out << total_ - failures_.size() << '/' << total_ << " checks";
        for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out << "; FAILED: " << failures_[i];
        return out.str();
    }

private:
    std::size_t total_ = 0;
    std::vector<std::string> failures_;
};

const StatsSummary& shipped_summary()
{
    static const StatsSummary summary = stats_summary(shipped_corpus());
    return summary;
}

/// |value - printed| <= 2 units in the printed value's last digit, decided exactly.
bool within_two_units(const Surd& value, const std::string& printed)
{
    auto point = printed.find('.');
    auto decimals = point == std::string::npos ? 0UL : printed.size() - point - 1;
    Rational expected = parse_decimal(printed);
    Rational slack = make_rational(2, pow(Rational(10), decimals).get_num());
    return value.compare(expected - slack) >= 0 && value.compare(expected + slack) <= 0;
}

void check_published(Checks& checks, const Surd& value, const std::string& printed, const std::string& label)
{
    checks.expect(within_two_units(value, printed),
                  label + " = " + value.to_significant(12) + ", published " + printed);
}

void criterion_corpus(Checks& checks)
{
    const Corpus& corpus = shipped_corpus();
    checks.expect(corpus.size() == 145, "145 records");
    checks.expect(validate_corpus(corpus).empty(), "no validation findings");

    std::map<std::int64_t, std::size_t> by_age;
    for (const auto& r : corpus.records) ++by_age[r.age];

    std::istringstream headers(read_file(test_data_path("published_age_groups.txt")));
    std::string line;
    std::size_t header_count = 0;
    std::size_t header_total = 0;
    while (std::getline(headers, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::int64_t age = 0;
        std::size_t count = 0;
        fields >> age >> count;
        ++header_count;
        header_total += count;
        checks.expect(by_age[age] == count, "age " + std::to_string(age) + " group has " + std::to_string(count));
    }
    checks.expect(header_count == by_age.size(), "one group per published header");
    checks.expect(header_total == 145, "headers sum to 145");
    checks.expect(by_age[89] == 13 && by_age[100] == 1, "13 at age 89, 1 at age 100");
}

void criterion_lemma(Checks& checks)
{
    Polynomial built = build_enumerator(shipped_corpus());
    Polynomial golden = parse_polynomial(read_file(data_path("lemma_enumerator.poly")));
    checks.expect(built == golden, "enumerator equals golden polynomial");
    checks.expect(built.evaluate(unit_point()) == 145, "F(1,1,1) = 145");
    checks.expect(built.degree(Variable::A) == 100, "degree 100 in a");
    checks.expect(built.degree(Variable::P) == 453, "degree 453 in p");
    checks.expect(built.degree(Variable::C) == 27492, "degree 27492 in c");
    checks.expect(built.min_degree(Variable::A) == 48, "min exponent 48 in a");
    checks.expect(built.min_degree(Variable::P) == 5, "min exponent 5 in p");
    checks.expect(built.min_degree(Variable::C) == 2, "min exponent 2 in c");
}

void criterion_axis(Checks& checks, Variable v, const std::array<std::string, 4>& printed)
{
    const AxisStats& axis = shipped_summary().axis(v);
    std::string name(variable_name(v));
    check_published(checks, axis.mean, printed[0], name + " mean");
    check_published(checks, axis.std_dev, printed[1], name + " std dev");
    check_published(checks, axis.skewness, printed[2], name + " skewness");
    check_published(checks, axis.kurtosis, printed[3], name + " kurtosis");
}

void criterion_correlations(Checks& checks)
{
    const StatsSummary& s = shipped_summary();
    check_published(checks, s.correlations.age_pub, "0.003", "age-pub correlation");
    check_published(checks, s.correlations.age_cit, "0.011", "age-cit correlation");
    check_published(checks, s.correlations.pub_cit, "0.57973", "pub-cit correlation");

    const MomentTable& m = s.moments;
    auto cauchy_schwarz = [&](MultiIndex mixed, Variable x, Variable y) {
        return m.at(mixed) * m.at(mixed) <= m.variance(x) * m.variance(y);
    };
    checks.expect(cauchy_schwarz({1, 1, 0}, Variable::A, Variable::P), "M110^2 <= M200 M020");
    checks.expect(cauchy_schwarz({1, 0, 1}, Variable::A, Variable::C), "M101^2 <= M200 M002");
    checks.expect(cauchy_schwarz({0, 1, 1}, Variable::P, Variable::C), "M011^2 <= M020 M002");
    for (const Surd* rho : {&s.correlations.age_pub, &s.correlations.age_cit, &s.correlations.pub_cit})
        checks.expect(rho->square() <= 1, "|rho| <= 1");
}

void criterion_oracle(Checks& checks)
{
    auto shipped = verify_moments(shipped_corpus(), 4);
    checks.expect(shipped.checks.size() == 35 && shipped.all_passed(), "shipped corpus: 35/35 identities");

    std::mt19937_64 rng(20221);
    std::uniform_int_distribution<std::size_t> size(1, 20);
    for (int i = 0; i < 100; ++i) {
        Corpus c = random_corpus(rng, size(rng), 100);
        auto report = verify_moments(c, 4);
        checks.expect(report.checks.size() == 35 && report.all_passed(), "random corpus " + std::to_string(i));
    }
}

void criterion_round_trip(Checks& checks)
{
    Polynomial built = build_enumerator(shipped_corpus());
    checks.expect(parse_polynomial(print_canonical(built)) == built, "shipped enumerator");
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 1000; ++i) {
        Polynomial x = random_polynomial(rng);
        checks.expect(parse_polynomial(print_canonical(x)) == x, "random polynomial " + print_canonical(x));
    }
}

void compare_ranking(Checks& checks, Variable key, const std::string& file)
{
    Corpus published = load_corpus_file(test_data_path(file), InputFormat::record_lines);
    Ranking ours = rank_records(shipped_corpus(), key);
    std::string name(variable_name(key));
    checks.expect(published.size() == ours.entries.size(), name + ": same length");
    if (published.size() != ours.entries.size()) return;

    std::map<std::int64_t, std::set<IdentityKey>> theirs_by_value, ours_by_value;
    for (std::size_t i = 0; i < published.size(); ++i) {
        const auto& p = published.records[i];
        const auto& o = ours.entries[i].record;
        checks.expect(axis_value(p, key) == axis_value(o, key),
                      name + " rank " + std::to_string(i + 1) + " key value");
        theirs_by_value[axis_value(p, key)].insert(identity_key(p));
        ours_by_value[axis_value(o, key)].insert(identity_key(o));
    }
    checks.expect(theirs_by_value == ours_by_value, name + ": tie groups agree as sets");
}

void criterion_rankings(Checks& checks)
{
    Ranking pubs = rank_records(shipped_corpus(), Variable::P);
    checks.expect(pubs.entries[0].record.publications == 453 && pubs.entries[0].record.citations == 9810,
                  "publications rank 1 = 453;9810");
    Ranking cites = rank_records(shipped_corpus(), Variable::C);
    checks.expect(cites.entries[0].record.publications == 237 && cites.entries[0].record.citations == 27492,
                  "citations rank 1 = 237;27492");
    checks.expect(cites.entries[1].record.publications == 175 && cites.entries[1].record.citations == 17621,
                  "citations rank 2 = 175;17621");
    compare_ranking(checks, Variable::P, "published_rank_publications.records");
    compare_ranking(checks, Variable::C, "published_rank_citations.records");

    std::size_t tied_2116 = 0, tied_145 = 0;
    for (const auto& e : cites.entries) {
        tied_2116 += e.record.citations == 2116;
        tied_145 += e.record.citations == 145;
    }
    checks.expect(tied_2116 == 2 && tied_145 == 2, "known citation ties at 2116 and 145");
}

MomentTable table_of(const Corpus& c)
{
    return moment_table(normalize(build_enumerator(c)));
}

bool degenerate(const MomentTable& m)
{
    return m.variance(Variable::A) == 0 || m.variance(Variable::P) == 0 || m.variance(Variable::C) == 0;
}

void criterion_properties(Checks& checks)
{
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> size(2, 20);
    std::uniform_int_distribution<std::int64_t> shift(-50, 50);
    std::uniform_int_distribution<long> factor(2, 9);
    const auto indices = indices_up_to(4);

    std::vector<Corpus> corpora{shipped_corpus()};
    while (corpora.size() < 30) {
        Corpus c = random_corpus(rng, size(rng), 100);
        if (!degenerate(table_of(c))) corpora.push_back(std::move(c));
    }

    for (std::size_t n = 0; n < corpora.size(); ++n) {
        const Corpus& c = corpora[n];
        const std::string tag = "corpus " + std::to_string(n) + ": ";
        MomentTable base = table_of(c);

        for (Variable v : kVariables) {
            MultiIndex first, second;
            first.r = v == Variable::A;
            first.s = v == Variable::P;
            first.t = v == Variable::C;
            second.r = 2 * first.r;
            second.s = 2 * first.s;
            second.t = 2 * first.t;
            checks.expect(base.at(first) == 0, tag + "first central moment is 0");
            checks.expect(scaled_moment(base, second).exact_value() == Rational(1), tag + "alpha_2 == 1");

            MultiIndex third{3 * first.r, 3 * first.s, 3 * first.t};
            MultiIndex fourth{4 * first.r, 4 * first.s, 4 * first.t};
            Rational bound = scaled_moment(base, third).square() + 1;
            checks.expect(scaled_moment(base, fourth).square() >= bound * bound, tag + "kurtosis >= skewness^2 + 1");
        }

        // Translation on every axis at once.
        Corpus moved = c;
        std::array<std::int64_t, 3> d{shift(rng), shift(rng), shift(rng)};
        for (auto& r : moved.records) {
            r.age += d[0];
            r.publications += d[1];
            r.citations += d[2];
        }
        MomentTable shifted = table_of(moved);
        checks.expect(shifted.central == base.central, tag + "translation leaves M unchanged");
        for (const auto& idx : indices) {
            if (idx.order() < 2) continue;
            checks.expect(scaled_moment(shifted, idx) == scaled_moment(base, idx),
                          tag + "translation leaves alpha" + to_string(idx) + " unchanged");
        }

        // Scaling one axis by k.
        for (Variable v : kVariables) {
            long k = factor(rng);
            Corpus scaled = c;
            for (auto& r : scaled.records) {
                if (v == Variable::A) r.age *= k;
                if (v == Variable::P) r.publications *= k;
                if (v == Variable::C) r.citations *= k;
            }
            MomentTable stretched = table_of(scaled);
            for (const auto& idx : indices) {
                Rational expected = base.at(idx) * pow(Rational(k), static_cast<unsigned long>(idx.component(v)));
                checks.expect(stretched.at(idx) == expected, tag + "M" + to_string(idx) + " scales by k^m");
                if (idx.order() < 2) continue;
                Surd before = scaled_moment(base, idx);
                Surd after = scaled_moment(stretched, idx);
                checks.expect(before.to_significant(30) == after.to_significant(30),
                              tag + "alpha" + to_string(idx) + " unchanged at 30 digits");
                checks.expect(before == after, tag + "alpha" + to_string(idx) + " unchanged exactly");
            }
        }
    }
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<void(Checks&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "Corpus fidelity", criterion_corpus},
        {2, "Enumerator reproduction", criterion_lemma},
        {3, "Age statistics",
         [](Checks& c) { criterion_axis(c, Variable::A, {"83.3655", "9.343", "-1.079", "4.3277"}); }},
        {4, "Publication statistics",
         [](Checks& c) { criterion_axis(c, Variable::P, {"98.531", "73.942", "1.757", "7.1779"}); }},
        {5, "Citation statistics",
         [](Checks& c) { criterion_axis(c, Variable::C, {"2473.234", "3455.194", "3.97", "23.993"}); }},
        {6, "Correlations", criterion_correlations},
        {7, "Operator path equals direct oracle", criterion_oracle},
        {8, "Polynomial text round-trip", criterion_round_trip},
        {9, "Ranking fidelity", criterion_rankings},
        {10, "Moment properties", criterion_properties},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Checks checks;
        try {
            criterion.run(checks);
        } catch (const std::exception& e) {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (checks.passed() ? "PASS" : "FAIL") << "  [" << criterion.id << "] " << criterion.name << " ("
                  << checks.summary() << ")\n";
        failed += checks.passed() ? 0 : 1;
    }
    std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
