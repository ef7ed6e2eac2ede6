#pragma once

// Shared fixtures and independent oracles for the unit tests. Nothing here
// calls into the code under test except to build inputs.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "euroqual/model.hpp"
#include "euroqual/team_file.hpp"

namespace euroqual::test {

inline TeamSet reference_teams() {
  return load_team_file(std::string(EUROQUAL_DATA_DIR) +
                        "/uefa_teams_2017.csv");
}

inline std::vector<TeamRecord> synthetic_records(
    const std::function<double(int)>& elo_of_rank) {
  std::vector<TeamRecord> records;
  for (int rank = 1; rank <= kNumTeams; ++rank) {
    char name[16];
    std::snprintf(name, sizeof name, "T%02d", rank);
    records.push_back({name, rank, elo_of_rank(rank)});
  }
  return records;
}

/// 55 teams named T01..T55 in rank order.
inline TeamSet synthetic_teams(const std::function<double(int)>& elo_of_rank) {
  return build_team_set(synthetic_records(elo_of_rank));
}

/// Closed-form win expectancy written out independently of the library.
inline double oracle_win(double elo_a, double elo_b, double s) {
  return 1.0 / (1.0 + std::pow(10.0, -(elo_a - elo_b) / s));
}

/// Overall ranking where the team with id k holds position k + 1 and the
/// first four of every league block are the group winners.
inline OverallRanking identity_ranking() {
  OverallRanking overall;
  for (int pos = 1; pos <= kNumTeams; ++pos) {
    overall.positions[pos - 1] = pos - 1;
    overall.position_of[pos - 1] = pos;
    const int first = league_first_position(tier_of_position(pos));
    overall.group_winner[pos - 1] = pos < first + 4;
  }
  return overall;
}

/// |observed - expected| within `tol`, for frequency checks.
inline bool near(double observed, double expected, double tol) {
  return std::abs(observed - expected) <= tol;
}

}  // namespace euroqual::test
