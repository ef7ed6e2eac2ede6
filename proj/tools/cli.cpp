#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "euroqual/team_file.hpp"
#include "report.hpp"

namespace euroqual::cli {

namespace {

constexpr int kUsageExit = 2;

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "simulate") return Mode::kSimulate;
  if (text == "counterfactual") return Mode::kCounterfactual;
  if (text == "sensitivity") return Mode::kSensitivity;
  if (text == "policy-compare") return Mode::kPolicyCompare;
  return std::nullopt;
}

[[noreturn]] void usage_error(const std::string& message) {
  throw ArgsError(message + "\nRun with --help for more information.",
                  kUsageExit);
}

std::string s_label(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "s%g", s);
  return buf;
}

CounterfactualBars bars_for(const std::string& label,
                            const CounterfactualReport& r) {
  return CounterfactualBars{label,
                            r.actual.teams[r.subject].name,
                            r.actual_rank,
                            r.hypothetical_rank,
                            r.actual.p_direct(r.subject),
                            r.actual.p_playoff(r.subject),
                            r.hypothetical.p_direct(r.subject),
                            r.hypothetical.p_playoff(r.subject)};
}

void add_counterfactual(Experiment& out, const std::string& prefix,
                        const TeamSet& teams, const SimConfig& cfg,
                        bool common_seed) {
  const RankSwap& swap = *cfg.counterfactual;
  const std::optional<TeamId> subject = teams.find(swap.team);
  if (!subject) {
    throw std::invalid_argument("unknown team '" + swap.team + "' in --swap");
  }
  CounterfactualReport r =
      run_counterfactual(teams, cfg, *subject, swap.target_rank, common_seed);
  out.counterfactuals.push_back(bars_for(prefix, r));
  const std::string sep = prefix.empty() ? "" : "_";
  out.runs.push_back({prefix + sep + "actual", std::move(r.actual)});
  out.runs.push_back({prefix + sep + "hypothetical", std::move(r.hypothetical)});
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kSimulate: return "simulate";
    case Mode::kCounterfactual: return "counterfactual";
    case Mode::kSensitivity: return "sensitivity";
    case Mode::kPolicyCompare: return "policy-compare";
  }
  return "?";
}

RankSwap parse_swap(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0 ||
      colon + 1 == text.size()) {
    throw std::invalid_argument("swap must look like NAME:RANK, got '" +
                                std::string(text) + "'");
  }
  const std::string_view digits = text.substr(colon + 1);
  int rank = 0;
  const auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || end != digits.data() + digits.size()) {
    throw std::invalid_argument("swap rank '" + std::string(digits) +
                                "' is not an integer");
  }
  if (rank < 1 || rank > kNumTeams) {
    throw std::invalid_argument("swap rank must be in 1..55, got " +
                                std::to_string(rank));
  }
  return RankSwap{std::string(text.substr(0, colon)), rank};
}

RunSpec parse_args(int argc, const char* const* argv) {
  RunSpec spec;
  std::string teams;
  std::string out = spec.out_dir.string();
  std::string policy = "regular";
  std::string mode = "simulate";
  std::string swap;

  CLI::App app{
      "Monte Carlo model of Euro 2020 qualification: Nations League, "
      "qualifying groups and play-off paths."};
  app.name("euroqual");
  app.add_option("--teams", teams, "Team table (name,uefa_rank,elo)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--iterations", spec.cfg.iterations, "Simulated seasons per run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", spec.cfg.master_seed, "Master seed")
      ->capture_default_str();
  app.add_option("--scale-s", spec.cfg.s, "Elo scale s")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--home-advantage", spec.cfg.home_advantage,
                 "Elo points added to the home side")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--policy", policy, "Play-off path formation")
      ->check(CLI::IsMember({"regular", "random", "seeded"}))
      ->capture_default_str();
  app.add_option("--mode", mode, "Experiment to run")
      ->check(CLI::IsMember(
          {"simulate", "counterfactual", "sensitivity", "policy-compare"}))
      ->capture_default_str();
  app.add_option("--swap", swap,
                 "NAME:RANK, give NAME initial rank RANK by trading places");
  app.add_option("--s-values", spec.s_values,
                 "Comma-separated scale values for sensitivity mode")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_flag("--emit-figure-data", spec.emit_figure_data,
               "Also write plot-ready tables");
  app.add_flag("--common-seed", spec.common_seed,
               "Simulate both counterfactual scenarios with the same seed");
  app.add_option("--workers", spec.cfg.workers,
                 "Worker threads, 0 = one per core")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    throw ArgsError(app.help(), 0);
  } catch (const CLI::ParseError& e) {
    usage_error(e.what());
  }

  spec.teams_path = teams;
  spec.out_dir = out;
  spec.mode = *parse_mode(mode);
  spec.cfg.path_policy = *parse_path_policy(policy);
  spec.cfg.check_structure = true;

  if (!swap.empty()) {
    try {
      spec.cfg.counterfactual = parse_swap(swap);
    } catch (const std::invalid_argument& e) {
      usage_error(std::string("--swap: ") + e.what());
    }
  }
  switch (spec.mode) {
    case Mode::kSimulate:
      if (spec.cfg.counterfactual) {
        usage_error("--swap needs --mode counterfactual, sensitivity or "
                    "policy-compare");
      }
      break;
    case Mode::kCounterfactual:
      if (!spec.cfg.counterfactual) {
        usage_error("--mode counterfactual needs --swap NAME:RANK");
      }
      break;
    case Mode::kSensitivity:
      if (spec.s_values.empty()) {
        usage_error("--mode sensitivity needs --s-values");
      }
      break;
    case Mode::kPolicyCompare:
      break;
  }
  if (spec.mode != Mode::kSensitivity && !spec.s_values.empty()) {
    usage_error("--s-values is only used with --mode sensitivity");
  }
  return spec;
}

Experiment run_experiment(const RunSpec& spec, const TeamSet& teams) {
  Experiment out;
  switch (spec.mode) {
    case Mode::kSimulate:
      out.runs.push_back({"baseline", run_simulation(teams, spec.cfg)});
      break;
    case Mode::kCounterfactual:
      add_counterfactual(out, "", teams, spec.cfg, spec.common_seed);
      break;
    case Mode::kSensitivity: {
      // A swap here shifts the team set under study; every s sees the same
      // seed so the curves differ only through s.
      std::vector<ProbabilityReport> reports =
          run_sensitivity(teams, spec.cfg, spec.s_values);
      for (std::size_t i = 0; i < reports.size(); ++i) {
        out.runs.push_back({s_label(spec.s_values[i]), std::move(reports[i])});
      }
      break;
    }
    case Mode::kPolicyCompare:
      for (PathPolicy policy :
           {PathPolicy::kRegular, PathPolicy::kRandom, PathPolicy::kSeeded}) {
        SimConfig cfg = spec.cfg;
        cfg.path_policy = policy;
        const std::string label(euroqual::to_string(policy));
        if (cfg.counterfactual) {
          add_counterfactual(out, label, teams, cfg, spec.common_seed);
        } else {
          out.runs.push_back({label, run_simulation(teams, cfg)});
        }
      }
      break;
  }
  return out;
}

int run(const RunSpec& spec, std::ostream& log, std::ostream& err) {
  try {
    const TeamSet teams = load_team_file(spec.teams_path);
    const Experiment experiment = run_experiment(spec, teams);

    for (const LabeledReport& run : experiment.runs) {
      log << run.label << ": " << run.report.iterations << " iterations, s="
          << run.report.config.s << ", policy "
          << euroqual::to_string(run.report.config.path_policy) << ", seed "
          << run.report.config.master_seed << '\n';
    }
    for (const CounterfactualBars& b : experiment.counterfactuals) {
      log << (b.label.empty() ? "" : b.label + ": ") << b.team << " rank "
          << b.actual_rank << " -> " << b.hypothetical_rank << ": total "
          << b.actual_direct + b.actual_playoff << " -> "
          << b.hypothetical_direct + b.hypothetical_playoff << '\n';
    }
    const auto written = write_report(experiment, spec);
    log << "wrote " << written.size() << " files to " << spec.out_dir.string()
        << '\n';
    return 0;
  } catch (const std::exception& e) {
    err << "euroqual: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace euroqual::cli
