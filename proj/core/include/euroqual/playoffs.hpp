#pragma once

#include <array>
#include <span>

#include "euroqual/elo_match.hpp"
#include "euroqual/model.hpp"
#include "euroqual/random_stream.hpp"

namespace euroqual {

struct PlayoffEntrant {
  TeamId team = 0;
  /// League whose play-off quota this team fills.
  Tier source_league = Tier::A;
  /// League the team actually played in.
  Tier league = Tier::A;
  bool group_winner = false;
  int overall_position = 0;

  friend bool operator==(const PlayoffEntrant&,
                         const PlayoffEntrant&) = default;
};

using PlayoffEntrants = std::array<PlayoffEntrant, 16>;

struct PlayoffPath {
  Tier label = Tier::A;
  /// Seeds 1..4. Best overall position first, except under the random
  /// policy where draw order decides.
  std::array<PlayoffEntrant, 4> entrants{};
};

struct PathFormation {
  std::array<PlayoffPath, 4> paths{};
  /// Group winners left facing a higher-league team because no admissible
  /// arrangement existed. Zero in every normal season.
  int relaxed_conflicts = 0;
};

struct PathResult {
  TeamId winner = 0;
  int host_semifinal = 1;  // 1 or 2
  std::array<MatchRecord, 3> matches{};  // SF1, SF2, final
};

/// Picks the 16 play-off teams. Each league fills a quota of four: its
/// group winners that did not qualify directly, then its next best-ranked
/// non-qualified teams. A quota that cannot be filled takes the best
/// remaining teams of the next lower league (A to B to C to D), and only when
/// every lower league is exhausted the lowest-ranked league with spare teams.
PlayoffEntrants select_playoff_teams(const OverallRanking& overall,
                                     std::span<const TeamId> direct_qualifiers);

/// Number of group winners in `entrants` that share the path with a team from
/// a higher-ranked league.
int group_winner_conflicts(std::span<const PlayoffEntrant> entrants);

/// League-based paths. Every league with at least four entrants forms its own
/// path holding all of its group winners; the remaining entrants fill the
/// other paths. The arrangement is uniform among those where no group winner
/// meets a team from a higher league or, if there are none, among those with
/// the fewest such meetings.
PathFormation form_paths_regular(const PlayoffEntrants& entrants,
                                 RandomStream& rng);

/// Uniform assignment of the 16 entrants to the 16 path slots. Draw order
/// inside a path is its seeding, so pairings and semifinal hosts are random
/// as well.
PathFormation form_paths_random(const PlayoffEntrants& entrants,
                                RandomStream& rng);

/// Quartiles by overall position form four pots; each path receives one
/// team from every pot.
PathFormation form_paths_seeded(const PlayoffEntrants& entrants,
                                RandomStream& rng);

PathFormation form_paths(PathPolicy policy, const PlayoffEntrants& entrants,
                         RandomStream& rng);

/// Draws the final's host semifinal, then plays seed 1 v seed 4 and seed 2 v
/// seed 3 with the better seeds at home, then the final at the drawn host.
/// Consumes one host draw and three match variates.
PathResult play_path(const PlayoffPath& path, const MatchModel& model,
                     RandomStream& rng);

}  // namespace euroqual
