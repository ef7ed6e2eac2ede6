#pragma once

#include <array>
#include <span>
#include <vector>

#include <boost/container/static_vector.hpp>

#include "euroqual/elo_match.hpp"
#include "euroqual/model.hpp"
#include "euroqual/random_stream.hpp"

namespace euroqual {

/// Members of one round-robin group. Nations League groups hold 3-4 teams,
/// qualifying groups 5-6.
using GroupMembers = boost::container::static_vector<TeamId, 6>;
using GroupMatches = boost::container::static_vector<MatchRecord, 30>;

inline std::span<const TeamId> view(const GroupMembers& m) {
  return {m.data(), m.size()};
}
inline std::span<const MatchRecord> view(const GroupMatches& m) {
  return {m.data(), m.size()};
}

struct League {
  Tier tier = Tier::A;
  /// Ordered by initial coefficient rank, best first.
  std::vector<TeamId> members;
};

struct NLGroup {
  Tier tier = Tier::A;
  int group_index = 1;  // 1..4
  GroupMembers members;
};

struct Placement {
  TeamId team = 0;
  int wins = 0;
  int position = 0;  // 1-based
  /// Wins against the team placed fourth in the same group; zero when the
  /// group has fewer than four teams.
  int wins_vs_fourth = 0;
};

struct StageStanding {
  int group_index = 0;
  boost::container::static_vector<Placement, 6> placements;
};

struct LeagueEntry {
  TeamId team = 0;
  int league_position = 0;  // 1..league size
  int group_position = 0;
  bool group_winner = false;
  /// Win count used to order teams sharing a group position.
  int ranking_wins = 0;
};

struct LeagueRanking {
  Tier tier = Tier::A;
  boost::container::static_vector<LeagueEntry, 16> entries;
};

/// Splits the teams into rank bands 1-12, 13-24, 25-39 and 40-55.
std::array<League, 4> allocate_leagues(const TeamSet& teams);

/// Pot-seeded draw: pot k holds league members 4k-3..4k by rank, and each
/// pot's teams go to distinct groups uniformly at random. In League C the
/// three-team Pot 4 leaves one group short.
std::array<NLGroup, 4> draw_nl_groups(const League& league, RandomStream& rng);

/// Double round robin. Pairs (i, j), i != j, are played in lexicographic
/// order of member indices with members[i] at home.
GroupMatches play_group(std::span<const TeamId> members,
                        const MatchModel& model, RandomStream& rng);

/// Orders a group by wins; equal-wins blocks are permuted uniformly.
/// Throws std::invalid_argument when `matches` is not a complete double
/// round robin over `members`.
StageStanding rank_group(std::span<const TeamId> members,
                         std::span<const MatchRecord> matches,
                         RandomStream& rng, int group_index = 0);

/// Merges four group standings into a league ranking: all winners first,
/// then runners-up, and so on. Within a position block teams are ordered by
/// wins; League C discards wins against each group's fourth-placed team.
/// Remaining ties are broken uniformly at random.
LeagueRanking league_ranking(Tier tier,
                             std::span<const StageStanding, 4> standings,
                             RandomStream& rng);

/// Concatenates the league rankings A, B, C, D into positions 1..55.
OverallRanking overall_ranking(std::span<const LeagueRanking, 4> rankings);

/// Everything produced by one simulated Nations League season.
struct NationsLeagueSeason {
  std::array<std::array<NLGroup, 4>, 4> groups;
  std::array<std::array<StageStanding, 4>, 4> standings;
  std::array<LeagueRanking, 4> rankings;
  OverallRanking overall;
  int match_count = 0;
};

NationsLeagueSeason play_nations_league(const std::array<League, 4>& leagues,
                                        const MatchModel& model,
                                        RandomStream& rng);

}  // namespace euroqual
