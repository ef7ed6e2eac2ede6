#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"

namespace euroqual::cli {

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes into spec.out_dir (created if needed):
///   <label>.csv          one row per team, probabilities to 6 decimals
///   summary.json         config echo and the exact integer counts
///   figure_*.csv         plot-ready tables, only with spec.emit_figure_data
/// Returns the paths written. Throws ReportError if a file cannot be written.
std::vector<std::filesystem::path> write_report(const Experiment& experiment,
                                                const RunSpec& spec);

/// One run as recorded in summary.json.
struct SummaryRun {
  std::string label;
  std::uint64_t iterations = 0;
  std::uint64_t master_seed = 0;
  std::vector<std::string> names;  // by team id
  ChannelCounts counts;
};

std::vector<SummaryRun> read_summary(const std::filesystem::path& path);

}  // namespace euroqual::cli
