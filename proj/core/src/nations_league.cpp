#include "euroqual/nations_league.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

#include "tie_break.hpp"

namespace euroqual {

std::array<League, 4> allocate_leagues(const TeamSet& teams) {
  std::array<League, 4> leagues;
  for (Tier tier : kTiers) {
    League& league = leagues[tier_index(tier)];
    league.tier = tier;
    const int first = league_first_position(tier);
    for (int rank = first; rank < first + league_size(tier); ++rank) {
      league.members.push_back(teams.at_rank(rank));
    }
  }
  return leagues;
}

std::array<NLGroup, 4> draw_nl_groups(const League& league,
                                      RandomStream& rng) {
  std::array<NLGroup, 4> groups;
  for (int g = 0; g < 4; ++g) {
    groups[g].tier = league.tier;
    groups[g].group_index = g + 1;
  }
  const int size = static_cast<int>(league.members.size());
  for (int pot_start = 0; pot_start < size; pot_start += 4) {
    // Empty slots stand for the missing teams of a short pot, so the group
    // left without a team from it is also uniform.
    std::array<TeamId, 4> slots = {-1, -1, -1, -1};
    for (int k = 0; k < 4 && pot_start + k < size; ++k) {
      slots[k] = league.members[pot_start + k];
    }
    rng.shuffle(slots);
    for (int g = 0; g < 4; ++g) {
      if (slots[g] >= 0) groups[g].members.push_back(slots[g]);
    }
  }
  return groups;
}

GroupMatches play_group(std::span<const TeamId> members,
                        const MatchModel& model, RandomStream& rng) {
  GroupMatches matches;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i != j) matches.push_back(model.play(members[i], members[j], rng));
    }
  }
  return matches;
}

StageStanding rank_group(std::span<const TeamId> members,
                         std::span<const MatchRecord> matches,
                         RandomStream& rng, int group_index) {
  const std::size_t n = members.size();
  if (n < 2 || n > 6) {
    throw std::invalid_argument("group size " + std::to_string(n) +
                                " outside 2..6");
  }
  std::array<std::int8_t, kNumTeams> slot;
  slot.fill(-1);
  for (std::size_t k = 0; k < n; ++k) {
    if (members[k] < 0 || members[k] >= kNumTeams || slot[members[k]] >= 0) {
      throw std::invalid_argument("group members must be distinct team ids");
    }
    slot[members[k]] = static_cast<std::int8_t>(k);
  }
  auto index_of = [&](TeamId id) -> int {
    return id >= 0 && id < kNumTeams ? slot[id] : -1;
  };

  std::array<std::array<bool, 6>, 6> played{};
  std::array<std::array<int, 6>, 6> beat{};
  for (const MatchRecord& m : matches) {
    const int h = index_of(m.home);
    const int a = index_of(m.away);
    if (h < 0 || a < 0 || h == a || (m.winner != m.home && m.winner != m.away)) {
      throw std::invalid_argument("match record outside the group");
    }
    if (played[h][a]) {
      throw std::invalid_argument("duplicate fixture in group record set");
    }
    played[h][a] = true;
    if (m.winner == m.home) {
      ++beat[h][a];
    } else {
      ++beat[a][h];
    }
  }
  if (matches.size() != n * (n - 1)) {
    throw std::invalid_argument("incomplete group record set: " +
                                std::to_string(matches.size()) + " of " +
                                std::to_string(n * (n - 1)) + " matches");
  }

  std::array<int, 6> order{};
  std::array<int, 6> wins{};
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = static_cast<int>(i);
    for (std::size_t j = 0; j < n; ++j) wins[i] += beat[i][j];
  }
  detail::order_with_random_ties(std::span(order.data(), n),
                                 [&](int i) { return wins[i]; }, rng);

  StageStanding standing;
  standing.group_index = group_index;
  for (std::size_t p = 0; p < n; ++p) {
    const int i = order[p];
    standing.placements.push_back(Placement{
        members[i], wins[i], static_cast<int>(p) + 1,
        n >= 4 ? beat[i][order[3]] : 0});
  }
  return standing;
}

LeagueRanking league_ranking(Tier tier,
                             std::span<const StageStanding, 4> standings,
                             RandomStream& rng) {
  LeagueRanking ranking;
  ranking.tier = tier;
  std::size_t deepest = 0;
  for (const StageStanding& s : standings) {
    deepest = std::max(deepest, s.placements.size());
  }
  for (std::size_t pos = 0; pos < deepest; ++pos) {
    boost::container::static_vector<LeagueEntry, 4> block;
    for (const StageStanding& s : standings) {
      if (pos >= s.placements.size()) continue;
      const Placement& p = s.placements[pos];
      const int key =
          tier == Tier::C ? p.wins - p.wins_vs_fourth : p.wins;
      block.push_back(LeagueEntry{p.team, 0, p.position, p.position == 1, key});
    }
    detail::order_with_random_ties(
        std::span(block.data(), block.size()),
        [](const LeagueEntry& e) { return e.ranking_wins; }, rng);
    for (LeagueEntry& e : block) {
      e.league_position = static_cast<int>(ranking.entries.size()) + 1;
      ranking.entries.push_back(e);
    }
  }
  return ranking;
}

OverallRanking overall_ranking(std::span<const LeagueRanking, 4> rankings) {
  OverallRanking overall;
  for (const LeagueRanking& r : rankings) {
    if (static_cast<int>(r.entries.size()) != league_size(r.tier)) {
      throw std::invalid_argument(std::string("league ") +
                                  tier_letter(r.tier) +
                                  " ranking is incomplete");
    }
    const int first = league_first_position(r.tier);
    for (const LeagueEntry& e : r.entries) {
      const int position = first + e.league_position - 1;
      overall.positions[position - 1] = e.team;
      overall.position_of[e.team] = position;
      overall.group_winner[e.team] = e.group_winner;
    }
  }
  return overall;
}

NationsLeagueSeason play_nations_league(const std::array<League, 4>& leagues,
                                        const MatchModel& model,
                                        RandomStream& rng) {
  NationsLeagueSeason season;
  for (const League& league : leagues) {
    const int t = tier_index(league.tier);
    season.groups[t] = draw_nl_groups(league, rng);
    for (int g = 0; g < 4; ++g) {
      const GroupMembers& members = season.groups[t][g].members;
      const GroupMatches matches = play_group(view(members), model, rng);
      season.match_count += static_cast<int>(matches.size());
      season.standings[t][g] = rank_group(view(members), view(matches), rng, g + 1);
    }
    season.rankings[t] = league_ranking(league.tier, season.standings[t], rng);
  }
  season.overall = overall_ranking(season.rankings);
  return season;
}

}  // namespace euroqual
