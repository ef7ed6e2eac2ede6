#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "euroqual/mc_engine.hpp"
#include "euroqual/model.hpp"

namespace euroqual::cli {

enum class Mode { kSimulate, kCounterfactual, kSensitivity, kPolicyCompare };

std::string_view to_string(Mode mode);

struct RunSpec {
  Mode mode = Mode::kSimulate;
  /// Carries the rank swap in cfg.counterfactual when --swap was given.
  SimConfig cfg;
  std::filesystem::path teams_path;
  std::filesystem::path out_dir = "euroqual_out";
  std::vector<double> s_values;
  bool emit_figure_data = false;
  bool common_seed = false;
};

/// Bad command line. exit_code is 0 for --help, where what() is the help text.
class ArgsError : public std::runtime_error {
 public:
  ArgsError(const std::string& message, int exit_code)
      : std::runtime_error(message), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

/// Parses "NAME:RANK". The name may itself contain colons; the rank must be
/// 1..55.
RankSwap parse_swap(std::string_view text);

/// Validated RunSpec; throws ArgsError.
RunSpec parse_args(int argc, const char* const* argv);

struct LabeledReport {
  std::string label;
  ProbabilityReport report;
};

/// Subject's two channels before and after a rank swap.
struct CounterfactualBars {
  std::string label;
  std::string team;
  int actual_rank = 0;
  int hypothetical_rank = 0;
  double actual_direct = 0.0;
  double actual_playoff = 0.0;
  double hypothetical_direct = 0.0;
  double hypothetical_playoff = 0.0;
};

struct Experiment {
  std::vector<LabeledReport> runs;
  std::vector<CounterfactualBars> counterfactuals;
};

/// Runs whatever `spec.mode` asks for on `teams`.
Experiment run_experiment(const RunSpec& spec, const TeamSet& teams);

/// Loads the team file, runs, writes the report and prints a short digest to
/// `log`. Returns the process exit status.
int run(const RunSpec& spec, std::ostream& log, std::ostream& err);

}  // namespace euroqual::cli
