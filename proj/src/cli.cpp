#include "enumstat/cli.hpp"

#include "enumstat/enumerator.hpp"
#include "enumstat/errors.hpp"
#include "enumstat/poly_text.hpp"
#include "enumstat/stats.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace enumstat {

using ordered_json = nlohmann::ordered_json;

namespace {

Corpus load_input(const CliConfig& config)
{
    InputFormat format = config.input_format.value_or(detect_format(config.input_path));
    return load_corpus_file(config.input_path, format);
}

Polynomial load_golden(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open golden polynomial '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_polynomial(buffer.str());
}

int run_ingest(const CliConfig& config, std::ostream& out)
{
    Corpus corpus = load_input(config);
    auto findings = validate_corpus(corpus);
    if (config.output_format == ReportFormat::json) {
        ordered_json doc;
        doc["records"] = corpus.size();
        doc["findings"] = ordered_json::array();
        for (const auto& f : findings)
            doc["findings"].push_back(
                {{"index", f.record_index}, {"name", f.record_name}, {"rule", f.rule}, {"detail", f.detail}});
        out << doc.dump(2) << '\n';
    } else {
        out << corpus.size() << " records\n";
        if (findings.empty()) out << "no findings\n";
        for (const auto& f : findings)
            out << "record " << f.record_index + 1 << " (" << f.record_name << "): " << f.rule << ": " << f.detail
                << '\n';
    }
    return findings.empty() ? exit_code::ok : exit_code::mismatch;
}

int run_poly(const CliConfig& config, std::ostream& out)
{
    Corpus corpus = load_input(config);
    Polynomial enumerator = build_enumerator(corpus);
    std::optional<bool> match;
    if (config.golden_poly_path) match = load_golden(*config.golden_poly_path) == enumerator;

    if (config.output_format == ReportFormat::json) {
        ordered_json doc;
        doc["terms"] = enumerator.size();
        doc["value_at_ones"] = to_string(enumerator.value_at_ones());
        if (!enumerator.is_zero()) {
            for (Variable v : kVariables)
                doc["degree"][std::string(1, variable_symbol(v))] = to_string(enumerator.degree(v));
        }
        doc["polynomial"] = lemma_listing(enumerator);
        if (match) doc["golden_match"] = *match;
        out << doc.dump(2) << '\n';
    } else {
        out << lemma_listing(enumerator) << '\n';
        if (match) out << "golden: " << (*match ? "match" : "MISMATCH") << '\n';
    }
    return match.value_or(true) ? exit_code::ok : exit_code::mismatch;
}

int run_stats(const CliConfig& config, std::ostream& out)
{
    StatsSummary summary = stats_summary(load_input(config), config.precision);
    out << theorem_report(summary, config.output_format, config.full ? Display::full : Display::published,
                          config.exact);
    return exit_code::ok;
}

int run_rank(const CliConfig& config, std::ostream& out)
{
    Corpus corpus = load_input(config);
    Ranking ranking =
        config.rank_key == Variable::A ? grouped_age_listing(corpus) : rank_records(corpus, config.rank_key);
    out << (config.output_format == ReportFormat::json ? ranking_json(ranking) : ranking_text(ranking));
    return exit_code::ok;
}

int run_verify(const CliConfig& config, std::ostream& out)
{
    if (!config.golden_poly_path) throw ContractError("verify needs --golden");
    Corpus corpus = load_input(config);
    Polynomial golden = load_golden(*config.golden_poly_path);

    auto findings = validate_corpus(corpus);
    bool poly_match = golden == build_enumerator(corpus);
    VerificationReport moments = verify_moments(corpus, config.max_order);
    std::vector<TheoremCheck> theorem;
    if (!config.skip_theorem) theorem = check_theorem_values(stats_summary(corpus, config.precision));
    auto theorem_passed = static_cast<std::size_t>(
        std::count_if(theorem.begin(), theorem.end(), [](const auto& c) { return c.passed; }));

    bool ok = findings.empty() && poly_match && moments.all_passed() && theorem_passed == theorem.size();

    if (config.output_format == ReportFormat::json) {
        ordered_json doc;
        doc["records"] = corpus.size();
        doc["findings"] = findings.size();
        doc["polynomial_match"] = poly_match;
        doc["moment_identities"] = {{"passed", moments.passed()}, {"total", moments.checks.size()}};
        ordered_json values = ordered_json::array();
        for (const auto& c : theorem)
            values.push_back({{"statistic", c.published.key},
                              {"published", c.published.text},
                              {"computed", c.computed},
                              {"passed", c.passed}});
        doc["theorem_values"] = values;
        doc["passed"] = ok;
        out << doc.dump(2) << '\n';
        return ok ? exit_code::ok : exit_code::mismatch;
    }

    out << "corpus: " << corpus.size() << " records, " << findings.size() << " findings\n";
    for (const auto& f : findings) out << "  finding: record " << f.record_index + 1 << ": " << f.rule << '\n';
    out << "polynomial: " << (poly_match ? "match" : "MISMATCH") << '\n';
    out << "moment identities: " << moments.passed() << '/' << moments.checks.size() << '\n';
    for (const auto& idx : moments.failures()) out << "  mismatch at M" << to_string(idx) << '\n';
    if (!config.skip_theorem) {
        out << "theorem values: " << theorem_passed << '/' << theorem.size() << '\n';
        for (const auto& c : theorem)
            if (!c.passed)
                out << "  " << c.published.key << ": published " << c.published.text << ", computed " << c.computed
                    << '\n';
    }
    if (ok) {
        out << "all checks passed: " << corpus.size() << " records, polynomial match, " << moments.passed() << '/'
            << moments.checks.size() << " moment identities";
        if (!config.skip_theorem) out << ", " << theorem_passed << '/' << theorem.size() << " theorem values";
        out << '\n';
    } else {
        out << "verification failed\n";
    }
    return ok ? exit_code::ok : exit_code::mismatch;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out)
{
    if (config.precision < 10) throw ContractError("--precision must be at least 10");
    if (config.max_order < 2 || config.max_order > 6) throw ContractError("--max-order must be in 2..6");
    switch (config.subcommand) {
        case Subcommand::ingest: return run_ingest(config, out);
        case Subcommand::poly: return run_poly(config, out);
        case Subcommand::stats: return run_stats(config, out);
        case Subcommand::rank: return run_rank(config, out);
        case Subcommand::verify: return run_verify(config, out);
    }
    return exit_code::input_error;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_precision)
{
    CliConfig config;
    if (env_precision) {
        try {
            config.precision = std::stoi(*env_precision);
        } catch (const std::exception&) {
            err << "error: ENUMSTAT_PRECISION is not an integer: '" << *env_precision << "'\n";
            return exit_code::input_error;
        }
    }

    CLI::App app{"Weight-enumerator statistics for bibliometric record corpora", "enumstat"};
    app.require_subcommand(1);

    const std::map<std::string, InputFormat> input_formats{{"records", InputFormat::record_lines},
                                                           {"csv", InputFormat::csv}};
    const std::map<std::string, ReportFormat> output_formats{{"text", ReportFormat::text},
                                                             {"json", ReportFormat::json}};
    const std::map<std::string, Variable> rank_keys{{"age", Variable::A},          {"pubs", Variable::P},
                                                    {"publications", Variable::P}, {"cites", Variable::C},
                                                    {"citations", Variable::C}};

    InputFormat input_format = InputFormat::record_lines;
    struct Entry {
        const char* name;
        const char* help;
        Subcommand sub;
    };
    const Entry entries[] = {
        {"ingest", "Load and validate a corpus", Subcommand::ingest},
        {"poly", "Print the weight enumerator in canonical form", Subcommand::poly},
        {"stats", "Means, deviations, skewness, kurtosis and correlations", Subcommand::stats},
        {"rank", "Rank records by age, publications or citations", Subcommand::rank},
        {"verify", "Run every consistency check against a golden enumerator", Subcommand::verify},
    };
    std::vector<std::pair<CLI::App*, Subcommand>> subs;
    for (const auto& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        sub->add_option("input", config.input_path, "Corpus file (.records or .csv)")->required();
        sub->add_option("--input-format", input_format, "Override input format detection")
            ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
        sub->add_option("--format", config.output_format, "Output format")
            ->transform(CLI::CheckedTransformer(output_formats, CLI::ignore_case));
        sub->add_option("--precision", config.precision, "Significant digits (>= 10)");
        if (e.sub == Subcommand::rank)
            sub->add_option("--by", config.rank_key, "Ranking key")
                ->transform(CLI::CheckedTransformer(rank_keys, CLI::ignore_case));
        if (e.sub == Subcommand::poly || e.sub == Subcommand::verify)
            sub->add_option("--golden", config.golden_poly_path, "Golden polynomial (.poly)");
        if (e.sub == Subcommand::verify) {
            sub->add_option("--max-order", config.max_order, "Highest moment order checked (2..6)");
            sub->add_flag("--skip-theorem", config.skip_theorem, "Skip the published-value comparison");
        }
        if (e.sub == Subcommand::stats) {
            sub->add_flag("--exact", config.exact, "Also print exact rational means and central moments");
            sub->add_flag("--full", config.full, "Print every statistic at --precision significant digits");
        }
        subs.emplace_back(sub, e.sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n\n" << app.help();
        return exit_code::input_error;
    }

    for (const auto& [sub, kind] : subs) {
        if (!sub->parsed()) continue;
        config.subcommand = kind;
        if (sub->count("--input-format") > 0) config.input_format = input_format;
    }

    std::ostringstream buffer;
    int status = exit_code::input_error;
    try {
        status = run(config, buffer);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }
    out << buffer.str();
    return status;
}

}  // namespace enumstat
