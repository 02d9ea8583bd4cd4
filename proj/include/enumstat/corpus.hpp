#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace enumstat {

/// One deceased fellow. `age` is stored rather than derived so that a
/// corrupted record can be represented and caught by validate_corpus().
struct FellowRecord {
    std::string name;
    std::int64_t birth_year = 0;
    std::int64_t death_year = 0;
    std::int64_t age = 0;
    std::int64_t publications = 0;
    std::int64_t citations = 0;

    friend bool operator==(const FellowRecord&, const FellowRecord&) = default;
};

/// Records are identified by their numeric fields; names are display-only
/// and spelled inconsistently across sources.
using IdentityKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;

[[nodiscard]] IdentityKey identity_key(const FellowRecord& record);

struct Corpus {
    std::vector<FellowRecord> records;
    std::string source_label;

    [[nodiscard]] std::size_t size() const noexcept { return records.size(); }
    [[nodiscard]] bool empty() const noexcept { return records.empty(); }
};

enum class InputFormat { record_lines, csv };

/// Parses `NAME ( BIRTH-DEATH) PUBS;CITES`, optionally preceded by a
/// `N.` rank prefix. Internal whitespace in the name collapses to single
/// spaces. Throws ParseError (location 0) when the line is malformed or
/// death <= birth.
[[nodiscard]] FellowRecord parse_record_line(std::string_view line);

/// Canonical record line, e.g. `Louis Nirenberg ( 1925-2020) 175;17621`.
[[nodiscard]] std::string render_record_line(const FellowRecord& record);

/// Reads a whole corpus in input order.
///
/// Record-lines input skips blank lines and lines whose first non-blank
/// character is '#'. CSV input must start with the header
/// `name,birth,death,publications,citations`; fields may be double-quoted.
/// Any bad line, or a repeated identity key, throws ParseError carrying the
/// 1-based line number.
[[nodiscard]] Corpus load_corpus(std::istream& source, InputFormat format, std::string source_label = {});

/// Opens and loads a file. Throws std::runtime_error when it cannot be read.
[[nodiscard]] Corpus load_corpus_file(const std::string& path, InputFormat format);

/// `.csv` maps to csv, everything else to record lines.
[[nodiscard]] InputFormat detect_format(std::string_view path);

struct Finding {
    std::size_t record_index = 0;
    std::string record_name;
    std::string rule;
    std::string detail;
};

/// Every invariant violation in the corpus; empty when the corpus is clean.
/// Rules: "age mismatch", "death not after birth", "negative publications",
/// "negative citations", "duplicate identity".
[[nodiscard]] std::vector<Finding> validate_corpus(const Corpus& corpus);

}  // namespace enumstat
