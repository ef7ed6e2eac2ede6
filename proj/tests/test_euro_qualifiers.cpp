#include <doctest.h>

#include <algorithm>
#include <set>

#include "euroqual/euro_qualifiers.hpp"
#include "support.hpp"

using namespace euroqual;
using euroqual::test::identity_ranking;
using euroqual::test::reference_teams;

namespace {

int pot_of(const QualifierPots& pots, TeamId id) {
  for (int k = 0; k < 7; ++k) {
    const auto& p = pots.pots[k];
    if (std::find(p.begin(), p.end(), id) != p.end()) return k;
  }
  return -1;
}

}  // namespace

TEST_CASE("pots band the overall ranking") {
  const OverallRanking overall = identity_ranking();
  const QualifierPots pots = form_pots(overall);
  for (int k = 0; k < 7; ++k) {
    CHECK(static_cast<int>(pots.pot(k).size()) == QualifierPots::kSizes[k]);
  }
  // Team id k sits at position k + 1.
  CHECK(pot_of(pots, 0) == 0);   // 1st
  CHECK(pot_of(pots, 3) == 0);   // 4th
  CHECK(pot_of(pots, 4) == 1);   // 5th
  CHECK(pot_of(pots, 39) == 4);  // 40th
  CHECK(pot_of(pots, 54) == 6);  // 55th
  const std::array<int, 8> bounds = {1, 5, 11, 21, 31, 41, 51, 56};
  for (int pos = 1; pos <= 55; ++pos) {
    int expected = 0;
    while (pos >= bounds[expected + 1]) ++expected;
    REQUIRE(pot_of(pots, pos - 1) == expected);
  }
  CHECK(pots.unl().size() == 4);
}

TEST_CASE("pots follow the ranking, not the team ids") {
  OverallRanking overall = identity_ranking();
  std::swap(overall.positions[0], overall.positions[54]);
  const QualifierPots pots = form_pots(overall);
  CHECK(pot_of(pots, 54) == 0);
  CHECK(pot_of(pots, 0) == 6);
  CHECK(form_pots(overall).pots == pots.pots);
}

TEST_CASE("qualifying group draw composition") {
  const QualifierPots pots = form_pots(identity_ranking());
  RandomStream rng(9, 9);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto groups = draw_q_groups(pots, rng);
    std::set<TeamId> all;
    for (int g = 0; g < 10; ++g) {
      const QGroup& q = groups[g];
      REQUIRE(q.label == 'A' + g);
      REQUIRE(q.members.size() == (g < 5 ? 5u : 6u));
      std::array<int, 7> from{};
      for (TeamId id : q.members) {
        all.insert(id);
        ++from[pot_of(pots, id)];
      }
      REQUIRE(from[0] == (g < 4 ? 1 : 0));
      REQUIRE(from[1] == (g >= 4 ? 1 : 0));
      for (int k = 2; k <= 5; ++k) REQUIRE(from[k] == 1);
      REQUIRE(from[6] == (g >= 5 ? 1 : 0));
    }
    REQUIRE(all.size() == 55);
  }
}

TEST_CASE("qualifying group draw is uniform") {
  const QualifierPots pots = form_pots(identity_ranking());
  const TeamId pot2_team = pots.pot(2)[3];
  const TeamId unl_team = pots.unl()[0];
  RandomStream rng(10, 0);
  std::array<int, 10> hits{};
  std::array<int, 10> unl_hits{};
  const int n = 100'000;
  for (int i = 0; i < n; ++i) {
    const auto groups = draw_q_groups(pots, rng);
    for (int g = 0; g < 10; ++g) {
      const auto& m = groups[g].members;
      if (std::find(m.begin(), m.end(), pot2_team) != m.end()) ++hits[g];
      if (std::find(m.begin(), m.end(), unl_team) != m.end()) ++unl_hits[g];
    }
  }
  for (int g = 0; g < 10; ++g) {
    CHECK(std::abs(hits[g] / double(n) - 0.1) <= 0.01);
    CHECK(std::abs(unl_hits[g] / double(n) - (g < 4 ? 0.25 : 0.0)) <= 0.01);
  }
}

TEST_CASE("qualifying stage produces twenty direct qualifiers") {
  const TeamSet teams = reference_teams();
  const MatchModel model(teams, SimConfig{});
  const QualifierPots pots = form_pots(identity_ranking());
  for (std::uint64_t k = 0; k < 2000; ++k) {
    RandomStream rng(11, k);
    const auto groups = draw_q_groups(pots, rng);
    const std::uint64_t before = rng.draws();
    const QualifyingStage stage = play_qualifiers(groups, model, rng);
    REQUIRE(stage.match_count == 250);
    REQUIRE(rng.draws() - before >= 250);

    std::set<TeamId> direct(stage.direct_qualifiers.begin(),
                            stage.direct_qualifiers.end());
    REQUIRE(direct.size() == 20);
    for (int g = 0; g < 10; ++g) {
      const auto& st = stage.standings[g];
      REQUIRE(st.placements.size() == groups[g].members.size());
      REQUIRE(stage.direct_qualifiers[2 * g] == st.placements[0].team);
      REQUIRE(stage.direct_qualifiers[2 * g + 1] == st.placements[1].team);
      int total = 0;
      for (const Placement& p : st.placements) total += p.wins;
      const int n = static_cast<int>(groups[g].members.size());
      REQUIRE(total == n * (n - 1));  // 20 for five teams, 30 for six
    }
  }
}
