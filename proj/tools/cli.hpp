#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <clubswarm/harness.hpp>

namespace clubswarm::cli {

enum class Subcommand { Run, Batch, Table3, Table4, Influence, Trace };
enum class OutputFormat { Csv, Json };

/// Bad command line. The message names the offending flag.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when no subcommand was given or --help was requested; carries the
/// help text.
class HelpRequested : public std::runtime_error {
 public:
  HelpRequested(std::string text, bool explicit_request)
      : std::runtime_error(std::move(text)), explicit_request(explicit_request) {}
  bool explicit_request;
};

struct ExperimentSpec {
  Subcommand command = Subcommand::Run;
  /// One entry for run/batch/trace; the grid rows for table3/table4.
  std::vector<FunctionId> functions{FunctionId::Sphere};
  /// Template for every run. For table presets the function and optimizer
  /// fields are overwritten per grid cell.
  RunConfig config{};
  /// Influence experiment; `membership` is overwritten per level.
  InfluenceConfig influence{};
  std::vector<std::size_t> levels{3, 10, 30};
  std::size_t jobs = 1;
  OutputFormat format = OutputFormat::Csv;
  std::filesystem::path out_dir = "results";
  /// True when --seed was omitted and config.seed came from entropy.
  bool seed_generated = false;

  bool operator==(const ExperimentSpec& o) const {
    return command == o.command && functions == o.functions && config == o.config &&
           influence == o.influence && levels == o.levels && jobs == o.jobs &&
           format == o.format && out_dir == o.out_dir;
  }
};

std::string_view subcommand_name(Subcommand c);

/// argv without the program name. Throws UsageError or HelpRequested.
ExperimentSpec parse_args(const std::vector<std::string>& args);

/// Canonical flags that parse back into `spec` (seed always explicit).
std::vector<std::string> to_args(const ExperimentSpec& spec);

/// Serializes a double with 17 significant digits.
std::string format_real(double v);

/// Writers for the on-disk formats. Each throws std::runtime_error naming
/// the path when the file cannot be written.
void write_trace(const std::filesystem::path& file, const RunTrace& trace, OutputFormat format,
                 const std::string& meta_json);

struct StatsRow {
  FunctionId function;
  OptimizerSpec optimizer;
  BatchStats stats;
};

void write_stats(const std::filesystem::path& file, const std::vector<StatsRow>& rows,
                 OutputFormat format, const std::string& meta_json);

/// Runs the experiment and writes all outputs under spec.out_dir. Progress
/// and summaries go to `log`.
void execute(const ExperimentSpec& spec, std::ostream& log);

/// Full entry point: parse, execute, map failures to exit codes
/// (0 ok, 1 runtime error, 2 usage error).
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clubswarm::cli
