#include "euroqual/elo_match.hpp"

#include <cmath>
#include <stdexcept>

namespace euroqual {

double win_expectancy(double elo_a, double elo_b, Venue venue,
                      const SimConfig& cfg) {
  double d = elo_a - elo_b;
  if (venue == Venue::kHomeFirstListed) d += cfg.home_advantage;
  return 1.0 / (1.0 + std::pow(10.0, -d / cfg.s));
}

MatchRecord resolve_match(TeamId home, TeamId away, double p_home, double r) {
  return MatchRecord{home, away, r < p_home ? home : away};
}

MatchRecord sample_match(const Team& home, const Team& away,
                         const SimConfig& cfg, RandomStream& rng) {
  if (home.id == away.id) {
    throw std::invalid_argument("team '" + home.name + "' cannot play itself");
  }
  const double p =
      win_expectancy(home.elo, away.elo, Venue::kHomeFirstListed, cfg);
  return resolve_match(home.id, away.id, p, rng.uniform());
}

MatchModel::MatchModel(const TeamSet& teams, const SimConfig& cfg) {
  cfg.validate();
  for (const Team& h : teams.teams()) {
    for (const Team& a : teams.teams()) {
      home_win_[h.id][a.id] =
          win_expectancy(h.elo, a.elo, Venue::kHomeFirstListed, cfg);
    }
  }
}

}  // namespace euroqual
