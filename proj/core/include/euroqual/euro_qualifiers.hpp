#pragma once

#include <array>

#include <boost/container/static_vector.hpp>

#include "euroqual/nations_league.hpp"

namespace euroqual {

/// Seeding pots of the qualifying group draw, indexed UNL pot = 0, Pot 1 = 1,
/// ..., Pot 6 = 6.
struct QualifierPots {
  static constexpr std::array<int, 7> kSizes = {4, 6, 10, 10, 10, 10, 5};
  std::array<boost::container::static_vector<TeamId, 10>, 7> pots;

  const auto& unl() const { return pots[0]; }
  const auto& pot(int k) const { return pots[k]; }
};

struct QGroup {
  char label = 'A';  // 'A'..'J'
  GroupMembers members;
};

struct QualifyingStage {
  std::array<QGroup, 10> groups;
  std::array<StageStanding, 10> standings;
  /// Winners and runners-up, group by group.
  std::array<TeamId, 20> direct_qualifiers{};
  int match_count = 0;
};

/// Bands the overall ranking: 1-4 UNL pot, 5-10 Pot 1, 11-20 Pot 2, 21-30
/// Pot 3, 31-40 Pot 4, 41-50 Pot 5, 51-55 Pot 6.
QualifierPots form_pots(const OverallRanking& overall);

/// Groups A-D take one UNL-pot team, E-J one Pot 1 team, F-J one Pot 6 team,
/// and every group one team from each of Pots 2-5. Each pot is spread over
/// its eligible groups uniformly at random. Draw restrictions (hosts,
/// prohibited clashes, winter venues, travel) are not applied.
std::array<QGroup, 10> draw_q_groups(const QualifierPots& pots,
                                     RandomStream& rng);

/// Plays and ranks every group; the top two of each qualify directly.
QualifyingStage play_qualifiers(const std::array<QGroup, 10>& groups,
                                const MatchModel& model, RandomStream& rng);

}  // namespace euroqual
