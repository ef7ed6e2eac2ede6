#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "euroqual/elo_match.hpp"
#include "euroqual/euro_qualifiers.hpp"
#include "euroqual/model.hpp"
#include "euroqual/nations_league.hpp"
#include "euroqual/playoffs.hpp"
#include "euroqual/random_stream.hpp"

namespace euroqual {

/// The 24 finalists of one simulated qualification.
struct IterationOutcome {
  std::array<TeamId, 20> direct{};
  std::array<TeamId, 4> playoff{};

  friend bool operator==(const IterationOutcome&,
                         const IterationOutcome&) = default;
};

/// Full trace of one simulated qualification, stage by stage.
struct Season {
  NationsLeagueSeason nations_league;
  QualifierPots pots;
  QualifyingStage qualifiers;
  PlayoffEntrants entrants{};
  PathFormation formation;
  std::array<PathResult, 4> path_results{};
  int playoff_match_count = 0;
  IterationOutcome outcome;
};

/// Runs complete qualifications for one TeamSet and configuration. Holds the
/// league allocation and the pairwise win probabilities, both fixed for a run.
class SeasonSimulator {
 public:
  SeasonSimulator(const TeamSet& teams, const SimConfig& cfg);

  Season simulate(RandomStream& rng) const;
  IterationOutcome run_iteration(RandomStream& rng) const {
    return simulate(rng).outcome;
  }

  const TeamSet& teams() const { return teams_; }
  const SimConfig& config() const { return cfg_; }

 private:
  TeamSet teams_;
  SimConfig cfg_;
  std::array<League, 4> leagues_;
  MatchModel model_;
};

/// One-shot convenience wrapper around SeasonSimulator.
IterationOutcome run_iteration(const TeamSet& teams, const SimConfig& cfg,
                               RandomStream& rng);

/// Describes the first structural invariant `season` breaks, if any: 24
/// distinct finalists, pot sizes, match counts, path composition rules of
/// `policy`, and at least one finalist per league under the regular policy.
std::optional<std::string> check_season(const Season& season,
                                        PathPolicy policy);

/// Exact per-team tallies. Merging is a commutative sum.
struct ChannelCounts {
  std::array<std::uint64_t, kNumTeams> direct{};
  std::array<std::uint64_t, kNumTeams> playoff{};
  /// Iterations whose regular path formation needed a relaxed arrangement.
  std::uint64_t relaxed_iterations = 0;

  void add(const IterationOutcome& outcome);
  ChannelCounts& operator+=(const ChannelCounts& other);
  friend bool operator==(const ChannelCounts&, const ChannelCounts&) = default;
};

struct ProbabilityReport {
  TeamSet teams;
  SimConfig config;
  std::uint64_t iterations = 0;
  ChannelCounts counts;

  double p_direct(TeamId id) const;
  double p_playoff(TeamId id) const;
  double p_total(TeamId id) const;
  /// Binomial standard error of p_total.
  double stderr_total(TeamId id) const;
};

/// Iteration k draws from RandomStream(cfg.master_seed, k). Iterations are
/// spread over cfg.workers threads; the counts do not depend on the split.
/// cfg.counterfactual, if set, is applied first and the report carries the
/// swapped TeamSet. Throws std::logic_error if any iteration breaks the
/// 24-finalist structure, or any check_season rule when cfg.check_structure
/// is set.
ProbabilityReport run_simulation(const TeamSet& teams, const SimConfig& cfg);

struct CounterfactualReport {
  TeamId subject = 0;
  int actual_rank = 0;
  int hypothetical_rank = 0;
  ProbabilityReport actual;
  ProbabilityReport hypothetical;
};

/// Master seed used for the swapped scenario of a counterfactual run.
std::uint64_t counterfactual_seed(std::uint64_t master_seed);

/// Simulates the given TeamSet and the one where `subject` trades initial
/// rank with the holder of `target_rank`. The scenarios use independent
/// seeds unless `common_seed` is set. cfg.counterfactual is ignored.
CounterfactualReport run_counterfactual(const TeamSet& teams,
                                        const SimConfig& cfg, TeamId subject,
                                        int target_rank,
                                        bool common_seed = false);

/// One simulation per scale value, everything else held fixed.
std::vector<ProbabilityReport> run_sensitivity(const TeamSet& teams,
                                               const SimConfig& cfg,
                                               std::span<const double> s_values);

}  // namespace euroqual
