#include "euroqual/mc_engine.hpp"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace euroqual {

SeasonSimulator::SeasonSimulator(const TeamSet& teams, const SimConfig& cfg)
    : teams_(teams),
      cfg_(cfg),
      leagues_(allocate_leagues(teams)),
      model_(teams, cfg) {}

Season SeasonSimulator::simulate(RandomStream& rng) const {
  Season season;
  season.nations_league = play_nations_league(leagues_, model_, rng);
  season.pots = form_pots(season.nations_league.overall);
  season.qualifiers =
      play_qualifiers(draw_q_groups(season.pots, rng), model_, rng);
  season.entrants = select_playoff_teams(
      season.nations_league.overall, season.qualifiers.direct_qualifiers);
  season.formation = form_paths(cfg_.path_policy, season.entrants, rng);
  for (int p = 0; p < 4; ++p) {
    season.path_results[p] =
        play_path(season.formation.paths[p], model_, rng);
    season.playoff_match_count += 3;
    season.outcome.playoff[p] = season.path_results[p].winner;
  }
  season.outcome.direct = season.qualifiers.direct_qualifiers;
  return season;
}

IterationOutcome run_iteration(const TeamSet& teams, const SimConfig& cfg,
                               RandomStream& rng) {
  return SeasonSimulator(teams, cfg).run_iteration(rng);
}

namespace {

bool has_24_distinct(const IterationOutcome& outcome) {
  std::bitset<kNumTeams> seen;
  for (TeamId id : outcome.direct) seen.set(id);
  for (TeamId id : outcome.playoff) seen.set(id);
  return seen.count() == 24;
}

}  // namespace

std::optional<std::string> check_season(const Season& season,
                                        PathPolicy policy) {
  if (!has_24_distinct(season.outcome)) {
    return "finalists are not 24 distinct teams";
  }
  for (int k = 0; k < 7; ++k) {
    if (static_cast<int>(season.pots.pots[k].size()) !=
        QualifierPots::kSizes[k]) {
      return "qualifier pot " + std::to_string(k) + " has wrong size";
    }
  }
  if (season.nations_league.match_count != 138) {
    return "Nations League played " +
           std::to_string(season.nations_league.match_count) + " matches";
  }
  if (season.qualifiers.match_count != 250) {
    return "qualifiers played " +
           std::to_string(season.qualifiers.match_count) + " matches";
  }
  if (season.playoff_match_count != 12) return "play-offs played wrong count";

  std::bitset<kNumTeams> direct;
  for (TeamId id : season.outcome.direct) direct.set(id);
  std::bitset<kNumTeams> entered;
  for (const PlayoffEntrant& e : season.entrants) {
    if (direct.test(e.team)) return "direct qualifier entered the play-offs";
    entered.set(e.team);
  }
  if (entered.count() != 16) return "play-off entrants are not 16 teams";

  const OverallRanking& overall = season.nations_league.overall;
  for (const PlayoffPath& path : season.formation.paths) {
    for (int i = 1; i < 4 && policy != PathPolicy::kRandom; ++i) {
      if (path.entrants[i - 1].overall_position >=
          path.entrants[i].overall_position) {
        return "path seeds out of order";
      }
    }
    if (policy == PathPolicy::kRegular &&
        group_winner_conflicts(path.entrants) >
            season.formation.relaxed_conflicts) {
      return "group winner meets a higher-league team";
    }
    if (policy == PathPolicy::kSeeded) {
      std::array<int, 16> sorted{};
      for (int i = 0; i < 16; ++i) {
        sorted[i] = season.entrants[i].overall_position;
      }
      std::sort(sorted.begin(), sorted.end());
      std::array<bool, 4> pot_seen{};
      for (const PlayoffEntrant& e : path.entrants) {
        const auto rank = std::lower_bound(sorted.begin(), sorted.end(),
                                           e.overall_position) -
                          sorted.begin();
        if (pot_seen[rank / 4]) return "seeded path repeats a pot";
        pot_seen[rank / 4] = true;
      }
    }
  }

  // A league short of four play-off teams has at least nine direct
  // qualifiers; otherwise it fields its own path and wins it.
  if (policy == PathPolicy::kRegular) {
    std::array<bool, 4> league_present{};
    for (TeamId id : season.outcome.direct) {
      league_present[tier_index(overall.league_of(id))] = true;
    }
    for (TeamId id : season.outcome.playoff) {
      league_present[tier_index(overall.league_of(id))] = true;
    }
    for (int l = 0; l < 4; ++l) {
      if (!league_present[l]) {
        return std::string("league ") + tier_letter(kTiers[l]) +
               " has no finalist";
      }
    }
  }
  return std::nullopt;
}

void ChannelCounts::add(const IterationOutcome& outcome) {
  for (TeamId id : outcome.direct) ++direct[id];
  for (TeamId id : outcome.playoff) ++playoff[id];
}

ChannelCounts& ChannelCounts::operator+=(const ChannelCounts& other) {
  for (int i = 0; i < kNumTeams; ++i) {
    direct[i] += other.direct[i];
    playoff[i] += other.playoff[i];
  }
  relaxed_iterations += other.relaxed_iterations;
  return *this;
}

double ProbabilityReport::p_direct(TeamId id) const {
  return static_cast<double>(counts.direct[id]) /
         static_cast<double>(iterations);
}

double ProbabilityReport::p_playoff(TeamId id) const {
  return static_cast<double>(counts.playoff[id]) /
         static_cast<double>(iterations);
}

double ProbabilityReport::p_total(TeamId id) const {
  return static_cast<double>(counts.direct[id] + counts.playoff[id]) /
         static_cast<double>(iterations);
}

double ProbabilityReport::stderr_total(TeamId id) const {
  const double p = p_total(id);
  return std::sqrt(p * (1.0 - p) / static_cast<double>(iterations));
}

ProbabilityReport run_simulation(const TeamSet& given, const SimConfig& cfg) {
  cfg.validate();
  TeamSet teams = given;
  if (cfg.counterfactual) {
    const std::optional<TeamId> subject = given.find(cfg.counterfactual->team);
    if (!subject) {
      throw std::invalid_argument("unknown team '" + cfg.counterfactual->team +
                                  "' in rank swap");
    }
    teams = apply_counterfactual(given, *subject,
                                 cfg.counterfactual->target_rank);
  }
  const SeasonSimulator simulator(teams, cfg);

  unsigned workers = cfg.workers != 0 ? cfg.workers
                                      : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(
      workers, 1, std::max<std::uint64_t>(1, cfg.iterations)));

  std::vector<ChannelCounts> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t begin = cfg.iterations * w / workers;
      const std::uint64_t end = cfg.iterations * (w + 1) / workers;
      ChannelCounts& counts = partial[w];
      for (std::uint64_t k = begin; k < end; ++k) {
        RandomStream rng(cfg.master_seed, k);
        const Season season = simulator.simulate(rng);
        if (!has_24_distinct(season.outcome)) {
          throw std::logic_error("iteration " + std::to_string(k) +
                                 " did not produce 24 distinct finalists");
        }
        if (cfg.check_structure) {
          if (auto broken = check_season(season, cfg.path_policy)) {
            throw std::logic_error("iteration " + std::to_string(k) + ": " +
                                   *broken);
          }
        }
        counts.add(season.outcome);
        if (season.formation.relaxed_conflicts > 0) {
          ++counts.relaxed_iterations;
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ProbabilityReport report{teams, cfg, cfg.iterations, {}};
  for (const ChannelCounts& c : partial) report.counts += c;
  return report;
}

std::uint64_t counterfactual_seed(std::uint64_t master_seed) {
  return mix64(master_seed ^ 0x5851f42d4c957f2dULL);
}

CounterfactualReport run_counterfactual(const TeamSet& teams,
                                        const SimConfig& cfg, TeamId subject,
                                        int target_rank, bool common_seed) {
  const TeamSet swapped = apply_counterfactual(teams, subject, target_rank);
  SimConfig actual_cfg = cfg;
  actual_cfg.counterfactual.reset();
  SimConfig hypothetical_cfg = actual_cfg;
  if (!common_seed) {
    hypothetical_cfg.master_seed = counterfactual_seed(cfg.master_seed);
  }
  ProbabilityReport hypothetical = run_simulation(swapped, hypothetical_cfg);
  // Already applied; kept on the report so it says what was simulated.
  hypothetical.config.counterfactual =
      RankSwap{teams[subject].name, target_rank};
  return CounterfactualReport{subject, teams[subject].uefa_rank,
                              swapped[subject].uefa_rank,
                              run_simulation(teams, actual_cfg),
                              std::move(hypothetical)};
}

std::vector<ProbabilityReport> run_sensitivity(
    const TeamSet& teams, const SimConfig& cfg,
    std::span<const double> s_values) {
  for (double s : s_values) {
    if (!(s > 0.0)) throw std::invalid_argument("scale values must be > 0");
  }
  std::vector<ProbabilityReport> reports;
  reports.reserve(s_values.size());
  for (double s : s_values) {
    SimConfig c = cfg;
    c.s = s;
    reports.push_back(run_simulation(teams, c));
  }
  return reports;
}

}  // namespace euroqual
