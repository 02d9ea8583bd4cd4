#pragma once

#include "enumstat/corpus.hpp"
#include "enumstat/polynomial.hpp"
#include "enumstat/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace enumstat {

enum class Subcommand { ingest, poly, stats, rank, verify };

struct CliConfig {
    Subcommand subcommand = Subcommand::stats;
    std::string input_path;
    std::optional<InputFormat> input_format;  // unset: detect from extension
    ReportFormat output_format = ReportFormat::text;
    Variable rank_key = Variable::A;
    std::optional<std::string> golden_poly_path;
    int precision = kDefaultPrecision;
    unsigned max_order = kDefaultMaxOrder;
    bool exact = false;
    bool full = false;
    bool skip_theorem = false;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int input_error = 2;
}  // namespace exit_code

/// Runs one CLI invocation. `args` excludes the program name. Report output
/// goes to `out` only when the exit status is 0 or 1; diagnostics go to
/// `err`. `env_precision` is the value of ENUMSTAT_PRECISION, if set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& env_precision = std::nullopt);

/// Executes an already-parsed configuration. Throws on input errors.
int run(const CliConfig& config, std::ostream& out);

}  // namespace enumstat
