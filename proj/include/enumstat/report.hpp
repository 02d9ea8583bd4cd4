#pragma once

#include "enumstat/corpus.hpp"
#include "enumstat/polynomial.hpp"
#include "enumstat/stats.hpp"

#include <string>
#include <vector>

namespace enumstat {

struct RankedEntry {
    std::size_t rank = 0;
    FellowRecord record;
};

struct AgeGroup {
    std::int64_t age = 0;
    std::vector<FellowRecord> members;
};

struct Ranking {
    Variable key = Variable::A;
    std::vector<RankedEntry> entries;
    std::vector<AgeGroup> groups;  // only filled by grouped_age_listing()
};

[[nodiscard]] std::int64_t axis_value(const FellowRecord& record, Variable axis);

/// Sorts by `key` descending. Ties go to the smaller value of the other
/// bibliometric axis (citations for a publication ranking, publications
/// otherwise), then to the name. Ranks run 1..N.
[[nodiscard]] Ranking rank_records(const Corpus& corpus, Variable key);

/// Age ranking plus the records grouped by age, oldest group first.
[[nodiscard]] Ranking grouped_age_listing(const Corpus& corpus);

[[nodiscard]] std::string ranking_text(const Ranking& ranking);
/// [{"rank","name","birth","death","age","publications","citations"}, ...]
[[nodiscard]] std::string ranking_json(const Ranking& ranking);

enum class ReportFormat { text, json };

/// `published`: each statistic rounded to the number of decimals the
/// published theorem uses. `full`: every statistic at the summary's
/// significant-digit precision.
enum class Display { published, full };

/// Four lines of text (one per axis, then correlations) or the JSON object
///   {"age":{"mean","std_dev","skewness","kurtosis"},"publications":{..},
///    "citations":{..},"correlations":{"age_pub","age_cit","pub_cit"},
///    "population":N,"precision":P,"display":"published"|"full"}
/// with numbers as decimal strings. `with_exact` appends the exact means
/// and central moments.
[[nodiscard]] std::string theorem_report(const StatsSummary& summary, ReportFormat format,
                                         Display display = Display::published, bool with_exact = false);

/// The enumerator in canonical text. ContractError on fractional exponents.
[[nodiscard]] std::string lemma_listing(const Polynomial& enumerator);

/// A statistic of the published theorem: its summary key (e.g.
/// "age.std_dev", "correlations.pub_cit"), the printed text, and how many
/// decimals were printed.
struct PublishedValue {
    std::string key;
    std::string text;
    int decimals = 0;
};

/// The fifteen values as printed, in theorem order.
[[nodiscard]] const std::vector<PublishedValue>& published_theorem_values();

/// Looks up a summary statistic by key. ContractError on an unknown key.
[[nodiscard]] const Surd& summary_value(const StatsSummary& summary, const std::string& key);

struct TheoremCheck {
    PublishedValue published;
    std::string computed;
    bool passed = false;
};

/// Compares each published value with the summary; a value passes when it
/// is within 2 units of the last printed digit (exact comparison).
[[nodiscard]] std::vector<TheoremCheck> check_theorem_values(const StatsSummary& summary);

}  // namespace enumstat
