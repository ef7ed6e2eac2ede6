#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "euroqual/nations_league.hpp"
#include "support.hpp"

using namespace euroqual;
using euroqual::test::reference_teams;

namespace {

// Complete double round robin over `members` where `home_wins(i, j)` decides
// the match with members[i] at home.
std::vector<MatchRecord> fixtures(const std::vector<TeamId>& members,
                                  const std::function<bool(int, int)>& home_wins) {
  std::vector<MatchRecord> out;
  for (int i = 0; i < static_cast<int>(members.size()); ++i) {
    for (int j = 0; j < static_cast<int>(members.size()); ++j) {
      if (i == j) continue;
      out.push_back({members[i], members[j],
                     home_wins(i, j) ? members[i] : members[j]});
    }
  }
  return out;
}

// Lower index always wins: wins 2(n-1), 2(n-2), ..., 0.
std::vector<MatchRecord> transitive(const std::vector<TeamId>& members) {
  return fixtures(members, [](int i, int j) { return i < j; });
}

std::vector<TeamId> order_of(const StageStanding& s) {
  std::vector<TeamId> out;
  for (const Placement& p : s.placements) out.push_back(p.team);
  return out;
}

StageStanding standing(int group_index, std::vector<Placement> placements) {
  StageStanding s;
  s.group_index = group_index;
  for (Placement& p : placements) s.placements.push_back(p);
  return s;
}

}  // namespace

TEST_CASE("leagues are rank bands") {
  const TeamSet teams = reference_teams();
  const auto leagues = allocate_leagues(teams);
  auto league_of = [&](const char* name) {
    const TeamId id = *teams.find(name);
    for (const League& l : leagues) {
      if (std::find(l.members.begin(), l.members.end(), id) != l.members.end()) {
        return l.tier;
      }
    }
    FAIL("team in no league");
    return Tier::A;
  };
  CHECK(league_of("Netherlands") == Tier::A);
  CHECK(league_of("Hungary") == Tier::C);
  CHECK(league_of("Azerbaijan") == Tier::D);

  for (const League& l : leagues) {
    REQUIRE(static_cast<int>(l.members.size()) == league_size(l.tier));
    for (std::size_t k = 0; k < l.members.size(); ++k) {
      CHECK(teams[l.members[k]].uefa_rank ==
            league_first_position(l.tier) + static_cast<int>(k));
    }
  }
}

TEST_CASE("group draws respect the pots and the group sizes") {
  const TeamSet teams = reference_teams();
  const auto leagues = allocate_leagues(teams);
  RandomStream rng(3, 0);
  for (int trial = 0; trial < 2000; ++trial) {
    for (const League& l : leagues) {
      const auto groups = draw_nl_groups(l, rng);
      std::multiset<std::size_t> sizes;
      std::set<TeamId> seen;
      for (const NLGroup& g : groups) {
        CHECK(g.tier == l.tier);
        sizes.insert(g.members.size());
        std::set<int> pots;
        for (TeamId id : g.members) {
          seen.insert(id);
          const int within = teams[id].uefa_rank - league_first_position(l.tier);
          REQUIRE(pots.insert(within / 4).second);  // one team per pot
        }
      }
      REQUIRE(seen.size() == l.members.size());
      switch (l.tier) {
        case Tier::A:
        case Tier::B:
          REQUIRE(sizes == std::multiset<std::size_t>{3, 3, 3, 3});
          break;
        case Tier::C:
          REQUIRE(sizes == std::multiset<std::size_t>{3, 4, 4, 4});
          break;
        case Tier::D:
          REQUIRE(sizes == std::multiset<std::size_t>{4, 4, 4, 4});
          break;
      }
    }
  }
}

TEST_CASE("group draws are uniform") {
  const TeamSet teams = reference_teams();
  const auto leagues = allocate_leagues(teams);
  const League& c = leagues[2];
  const League& d = leagues[3];
  const TeamId top_d = d.members[0];

  RandomStream rng(17, 0);
  std::array<int, 4> top_d_in{};
  std::array<int, 4> short_c{};
  const int n = 100'000;
  for (int i = 0; i < n; ++i) {
    const auto dg = draw_nl_groups(d, rng);
    for (int g = 0; g < 4; ++g) {
      if (std::find(dg[g].members.begin(), dg[g].members.end(), top_d) !=
          dg[g].members.end()) {
        ++top_d_in[g];
      }
    }
    const auto cg = draw_nl_groups(c, rng);
    for (int g = 0; g < 4; ++g) {
      if (cg[g].members.size() == 3) ++short_c[g];
    }
  }
  for (int g = 0; g < 4; ++g) {
    CHECK(std::abs(top_d_in[g] / double(n) - 0.25) <= 0.01);
    CHECK(std::abs(short_c[g] / double(n) - 0.25) <= 0.01);
  }
}

TEST_CASE("round robin plays every ordered pair once in fixed order") {
  const TeamSet teams = reference_teams();
  const MatchModel model(teams, SimConfig{});
  for (int n : {3, 4, 5, 6}) {
    std::vector<TeamId> members;
    for (int k = 0; k < n; ++k) members.push_back(7 * k + 2);
    RandomStream rng(1, static_cast<std::uint64_t>(n));
    const GroupMatches m = play_group(members, model, rng);
    REQUIRE(static_cast<int>(m.size()) == n * (n - 1));
    CHECK(rng.draws() == static_cast<std::uint64_t>(n * (n - 1)));
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        CHECK(m[k].home == members[i]);
        CHECK(m[k].away == members[j]);
        CHECK((m[k].winner == members[i] || m[k].winner == members[j]));
        ++k;
      }
    }
    if (n == 4) {
      for (TeamId t : members) {
        CHECK(std::count_if(m.begin(), m.end(), [&](const MatchRecord& r) {
                return r.home == t || r.away == t;
              }) == 6);
      }
    }
  }
}

TEST_CASE("group ranking by wins") {
  RandomStream rng(5, 5);

  SUBCASE("strict order needs no randomness") {
    const auto m3 = transitive({10, 11, 12});
    const StageStanding s3 = rank_group(std::vector<TeamId>{12, 10, 11}, m3, rng);
    CHECK(order_of(s3) == std::vector<TeamId>{10, 11, 12});
    CHECK(s3.placements[0].wins == 4);
    CHECK(s3.placements[1].wins == 2);
    CHECK(s3.placements[2].wins == 0);
    CHECK(rng.draws() == 0);

    const auto m4 = transitive({20, 21, 22, 23});
    const StageStanding s4 = rank_group(std::vector<TeamId>{23, 22, 21, 20}, m4, rng);
    CHECK(order_of(s4) == std::vector<TeamId>{20, 21, 22, 23});
    for (int p = 0; p < 4; ++p) {
      CHECK(s4.placements[p].position == p + 1);
      CHECK(s4.placements[p].wins == 6 - 2 * p);
    }
    // Everyone above the fourth beat it twice.
    CHECK(s4.placements[0].wins_vs_fourth == 2);
    CHECK(s4.placements[2].wins_vs_fourth == 2);
    CHECK(s4.placements[3].wins_vs_fourth == 0);
  }

  SUBCASE("a three-way tie is broken uniformly") {
    // Home side always wins: 2 wins each.
    const std::vector<TeamId> members = {30, 31, 32};
    const auto m = fixtures(members, [](int, int) { return true; });
    std::array<int, 3> first{};
    const int n = 100'000;
    for (int i = 0; i < n; ++i) {
      const StageStanding s = rank_group(members, m, rng);
      ++first[s.placements[0].team - 30];
    }
    for (int f : first) CHECK(std::abs(f / double(n) - 1.0 / 3) <= 0.01);
  }

  SUBCASE("incomplete or foreign records are rejected") {
    auto m = transitive({1, 2, 3});
    const std::vector<TeamId> members = {1, 2, 3};
    m.pop_back();
    CHECK_THROWS_AS(rank_group(members, m, rng), std::invalid_argument);
    m = transitive({1, 2, 4});
    CHECK_THROWS_AS(rank_group(members, m, rng), std::invalid_argument);
    m = transitive({1, 2, 3});
    m[1] = m[0];
    CHECK_THROWS_AS(rank_group(members, m, rng), std::invalid_argument);
    CHECK_THROWS_AS(rank_group(std::vector<TeamId>{1}, {}, rng),
                    std::invalid_argument);
  }
}

TEST_CASE("league ranking orders position blocks by wins") {
  RandomStream rng(8, 8);

  SUBCASE("distinct counts, League D") {
    std::array<StageStanding, 4> s = {
        standing(1, {{40, 5, 1, 2}, {41, 4, 2, 2}, {42, 3, 3, 2}, {43, 0, 4, 0}}),
        standing(2, {{44, 6, 1, 2}, {45, 3, 2, 1}, {46, 2, 3, 1}, {47, 1, 4, 0}}),
        standing(3, {{48, 4, 1, 1}, {49, 4, 2, 2}, {50, 2, 3, 2}, {51, 2, 4, 0}}),
        standing(4, {{52, 3, 1, 1}, {53, 3, 2, 1}, {54, 3, 3, 1}, {39, 3, 4, 0}}),
    };
    const LeagueRanking r = league_ranking(Tier::D, s, rng);
    REQUIRE(r.entries.size() == 16);
    CHECK(r.entries[0].team == 44);
    CHECK(r.entries[1].team == 40);
    CHECK(r.entries[2].team == 48);
    CHECK(r.entries[3].team == 52);
    for (int k = 0; k < 16; ++k) {
      CHECK(r.entries[k].league_position == k + 1);
      CHECK(r.entries[k].group_position == k / 4 + 1);
      CHECK(r.entries[k].group_winner == (k < 4));
    }
  }

  SUBCASE("League C ignores wins against the fourth") {
    // Group 1 has three teams; its winner won 4. The group 2 winner won 6,
    // two of them against its own fourth, so both count 4.
    std::array<StageStanding, 4> s = {
        standing(1, {{24, 4, 1, 0}, {25, 2, 2, 0}, {26, 0, 3, 0}}),
        standing(2, {{27, 6, 1, 2}, {28, 4, 2, 2}, {29, 2, 3, 2}, {30, 0, 4, 0}}),
        standing(3, {{31, 5, 1, 2}, {32, 3, 2, 1}, {33, 3, 3, 1}, {34, 1, 4, 0}}),
        standing(4, {{35, 3, 1, 1}, {36, 3, 2, 2}, {37, 3, 3, 1}, {38, 3, 4, 0}}),
    };
    int short_group_first = 0;
    const int n = 20'000;
    for (int i = 0; i < n; ++i) {
      const LeagueRanking r = league_ranking(Tier::C, s, rng);
      REQUIRE(r.entries.size() == 15);
      const std::set<TeamId> top2 = {r.entries[0].team, r.entries[1].team};
      REQUIRE(top2 == std::set<TeamId>{24, 27});
      REQUIRE(r.entries[2].team == 31);  // 5 - 2 = 3
      REQUIRE(r.entries[3].team == 35);  // 3 - 1 = 2
      if (r.entries[0].team == 24) ++short_group_first;
      // Fourths come last.
      REQUIRE(r.entries[12].group_position == 4);
      REQUIRE(r.entries[14].group_position == 4);
    }
    CHECK(std::abs(short_group_first / double(n) - 0.5) <= 0.015);

    // Without the exclusion the six-win winner would lead outright.
    const LeagueRanking d = league_ranking(Tier::D, s, rng);
    CHECK(d.entries[0].team == 27);
  }
}

TEST_CASE("overall ranking concatenates the leagues") {
  const TeamSet teams = reference_teams();
  const MatchModel model(teams, SimConfig{});
  const auto leagues = allocate_leagues(teams);
  RandomStream rng(42, 0);
  const NationsLeagueSeason season = play_nations_league(leagues, model, rng);
  const OverallRanking& o = season.overall;

  // Best League D winner is 40th, worst League C team 39th.
  CHECK(o.positions[39] == season.rankings[3].entries[0].team);
  CHECK(season.rankings[3].entries[0].group_winner);
  CHECK(o.positions[38] == season.rankings[2].entries[14].team);
  // League B runners-up hold 17-20.
  for (int pos = 17; pos <= 20; ++pos) {
    const TeamId id = o.positions[pos - 1];
    const auto& entries = season.rankings[1].entries;
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [&](const LeagueEntry& e) { return e.team == id; });
    REQUIRE(it != entries.end());
    CHECK(it->group_position == 2);
  }

  LeagueRanking incomplete = season.rankings[0];
  incomplete.entries.pop_back();
  std::array<LeagueRanking, 4> broken = season.rankings;
  broken[0] = incomplete;
  CHECK_THROWS_AS(overall_ranking(broken), std::invalid_argument);
}

TEST_CASE("Nations League season invariants") {
  const TeamSet teams = reference_teams();
  const auto leagues = allocate_leagues(teams);
  for (double s : {400.0, 1e6}) {
    SimConfig cfg;
    cfg.s = s;
    const MatchModel model(teams, cfg);
    for (std::uint64_t k = 0; k < 3000; ++k) {
      RandomStream rng(2024, k);
      const NationsLeagueSeason season = play_nations_league(leagues, model, rng);
      REQUIRE(season.match_count == 138);
      const OverallRanking& o = season.overall;

      std::array<bool, 55> seen{};
      int winners = 0;
      for (int pos = 1; pos <= 55; ++pos) {
        const TeamId id = o.positions[pos - 1];
        REQUIRE(!seen[id]);
        seen[id] = true;
        REQUIRE(o.position_of[id] == pos);
        // Teams stay in their league block.
        REQUIRE(tier_of_position(pos) == tier_of_position(teams[id].uefa_rank));
        const int first = league_first_position(tier_of_position(pos));
        REQUIRE(o.group_winner[id] == (pos < first + 4));
        winners += o.group_winner[id];
      }
      REQUIRE(winners == 16);

      for (int t = 0; t < 4; ++t) {
        for (const StageStanding& st : season.standings[t]) {
          const int n = static_cast<int>(st.placements.size());
          int total = 0;
          for (int p = 0; p < n; ++p) {
            REQUIRE(st.placements[p].position == p + 1);
            if (p > 0) {
              REQUIRE(st.placements[p].wins <= st.placements[p - 1].wins);
            }
            total += st.placements[p].wins;
          }
          REQUIRE(total == n * (n - 1));
        }
        if (kTiers[t] == Tier::C) {
          for (const LeagueEntry& e : season.rankings[t].entries) {
            REQUIRE(e.ranking_wins >= 0);
            REQUIRE(e.ranking_wins <= 4);
          }
        }
      }
    }
  }
}
