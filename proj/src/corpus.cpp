#include "enumstat/corpus.hpp"

#include "enumstat/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace enumstat {

IdentityKey identity_key(const FellowRecord& record)
{
    return {record.birth_year, record.death_year, record.publications, record.citations};
}

namespace {

bool is_space(char ch)
{
    return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

bool is_digit(char ch)
{
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::string collapse_whitespace(std::string_view s)
{
    std::string out;
    bool pending_space = false;
    for (char ch : trim(s)) {
        if (is_space(ch)) {
            pending_space = true;
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(ch);
    }
    return out;
}

std::optional<std::int64_t> parse_count(std::string_view s)
{
    s = trim(s);
    if (s.empty()) return std::nullopt;
    for (char ch : s)
        if (!is_digit(ch)) return std::nullopt;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

[[noreturn]] void fail(std::string_view line, const std::string& why)
{
    throw ParseError(why + " in record line '" + std::string(trim(line)) + "'", 0);
}

std::string_view strip_rank_prefix(std::string_view s)
{
    std::size_t i = 0;
    while (i < s.size() && is_digit(s[i])) ++i;
    if (i == 0 || i >= s.size() || s[i] != '.') return s;
    if (i + 1 < s.size() && !is_space(s[i + 1])) return s;
    return trim(s.substr(i + 1));
}

FellowRecord make_record(std::string_view line, std::string name, std::int64_t birth, std::int64_t death,
                         std::int64_t pubs, std::int64_t cites)
{
    if (name.empty()) fail(line, "empty name");
    if (death <= birth) fail(line, "death year not after birth year");
    return FellowRecord{std::move(name), birth, death, death - birth, pubs, cites};
}

}  // namespace

FellowRecord parse_record_line(std::string_view line)
{
    std::string_view body = strip_rank_prefix(trim(line));

    auto open = body.rfind('(');
    auto close = body.rfind(')');
    if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        fail(line, "missing '(BIRTH-DEATH)'");

    std::string_view years = body.substr(open + 1, close - open - 1);
    auto dash = years.find('-');
    if (dash == std::string_view::npos) fail(line, "missing '-' between years");
    auto birth = parse_count(years.substr(0, dash));
    auto death = parse_count(years.substr(dash + 1));
    if (!birth || !death) fail(line, "malformed years");

    std::string_view counts = body.substr(close + 1);
    auto semi = counts.find(';');
    if (semi == std::string_view::npos) fail(line, "missing ';'");
    auto pubs = parse_count(counts.substr(0, semi));
    auto cites = parse_count(counts.substr(semi + 1));
    if (!pubs || !cites) fail(line, "non-numeric counts");

    return make_record(line, collapse_whitespace(body.substr(0, open)), *birth, *death, *pubs, *cites);
}

std::string render_record_line(const FellowRecord& record)
{
    std::ostringstream out;
    out << record.name << " ( " << record.birth_year << '-' << record.death_year << ") " << record.publications
        << ';' << record.citations;
    return out.str();
}

namespace {

constexpr std::string_view kCsvHeader = "name,birth,death,publications,citations";

std::vector<std::string> split_csv_row(std::string_view row, std::size_t line_no)
{
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
        char ch = row[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < row.size() && row[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    if (quoted) throw ParseError("line " + std::to_string(line_no) + ": unterminated quote", line_no);
    fields.push_back(std::move(field));
    return fields;
}

FellowRecord parse_csv_row(std::string_view row, std::size_t line_no)
{
    auto fields = split_csv_row(row, line_no);
    if (fields.size() != 5)
        throw ParseError("line " + std::to_string(line_no) + ": expected 5 fields, found " +
                             std::to_string(fields.size()),
                         line_no);
    auto birth = parse_count(fields[1]);
    auto death = parse_count(fields[2]);
    auto pubs = parse_count(fields[3]);
    auto cites = parse_count(fields[4]);
    if (!birth || !death || !pubs || !cites)
        throw ParseError("line " + std::to_string(line_no) + ": non-numeric field in '" + std::string(row) + "'",
                         line_no);
    return make_record(row, collapse_whitespace(fields[0]), *birth, *death, *pubs, *cites);
}

}  // namespace

Corpus load_corpus(std::istream& source, InputFormat format, std::string source_label)
{
    Corpus corpus;
    corpus.source_label = std::move(source_label);
    std::map<IdentityKey, std::size_t> seen;

    std::string raw;
    std::size_t line_no = 0;
    bool header_pending = format == InputFormat::csv;
    while (std::getline(source, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (line_no == 1 && raw.starts_with("\xEF\xBB\xBF")) raw.erase(0, 3);
        std::string_view line = trim(raw);
        if (line.empty()) continue;

        FellowRecord record;
        if (format == InputFormat::csv) {
            if (header_pending) {
                if (line != kCsvHeader)
                    throw ParseError("line " + std::to_string(line_no) + ": expected CSV header '" +
                                         std::string(kCsvHeader) + "'",
                                     line_no);
                header_pending = false;
                continue;
            }
            record = parse_csv_row(line, line_no);
        } else {
            if (line.front() == '#') continue;
            try {
                record = parse_record_line(line);
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
            }
        }

        auto [it, inserted] = seen.emplace(identity_key(record), line_no);
        if (!inserted)
            throw ParseError("line " + std::to_string(line_no) + ": duplicate identity of line " +
                                 std::to_string(it->second),
                             line_no);
        corpus.records.push_back(std::move(record));
    }
    return corpus;
}

Corpus load_corpus_file(const std::string& path, InputFormat format)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return load_corpus(in, format, path);
}

InputFormat detect_format(std::string_view path)
{
    return path.ends_with(".csv") ? InputFormat::csv : InputFormat::record_lines;
}

std::vector<Finding> validate_corpus(const Corpus& corpus)
{
    std::vector<Finding> findings;
    std::map<IdentityKey, std::size_t> seen;
    for (std::size_t i = 0; i < corpus.records.size(); ++i) {
        const auto& r = corpus.records[i];
        auto add = [&](std::string rule, std::string detail) {
            findings.push_back(Finding{i, r.name, std::move(rule), std::move(detail)});
        };
        if (r.death_year <= r.birth_year)
            add("death not after birth", std::to_string(r.birth_year) + "-" + std::to_string(r.death_year));
        if (r.age != r.death_year - r.birth_year)
            add("age mismatch", "age " + std::to_string(r.age) + " but years give " +
                                    std::to_string(r.death_year - r.birth_year));
        if (r.publications < 0) add("negative publications", std::to_string(r.publications));
        if (r.citations < 0) add("negative citations", std::to_string(r.citations));
        auto [it, inserted] = seen.emplace(identity_key(r), i);
        if (!inserted) add("duplicate identity", "same key as record " + std::to_string(it->second));
    }
    return findings;
}

}  // namespace enumstat
