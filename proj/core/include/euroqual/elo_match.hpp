#pragma once

#include <array>

#include "euroqual/model.hpp"
#include "euroqual/random_stream.hpp"

namespace euroqual {

enum class Venue : std::uint8_t { kHomeFirstListed, kNeutral };

/// Probability that a team rated `elo_a` beats one rated `elo_b`:
/// 1 / (1 + 10^(-d/s)) with d = elo_a - elo_b, plus the home bonus when the
/// first-listed team is at home. Requires cfg.s > 0.
double win_expectancy(double elo_a, double elo_b, Venue venue,
                      const SimConfig& cfg);

/// Settles a match from a single uniform variate: home wins iff r < p_home.
MatchRecord resolve_match(TeamId home, TeamId away, double p_home, double r);

/// Plays `home` against `away` at home's ground. Consumes exactly one variate.
/// Throws std::invalid_argument when both sides are the same team.
MatchRecord sample_match(const Team& home, const Team& away,
                         const SimConfig& cfg, RandomStream& rng);

/// Home-win probabilities for every ordered pair of a TeamSet, evaluated once
/// with win_expectancy so the season loop avoids repeated pow() calls.
class MatchModel {
 public:
  MatchModel(const TeamSet& teams, const SimConfig& cfg);

  double home_win(TeamId home, TeamId away) const {
    return home_win_[home][away];
  }

  MatchRecord play(TeamId home, TeamId away, RandomStream& rng) const {
    return resolve_match(home, away, home_win(home, away), rng.uniform());
  }

 private:
  std::array<std::array<double, kNumTeams>, kNumTeams> home_win_{};
};

}  // namespace euroqual
