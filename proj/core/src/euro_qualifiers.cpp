#include "euroqual/euro_qualifiers.hpp"

namespace euroqual {

namespace {

// First and one-past-last group index each pot is spread over.
constexpr std::array<std::pair<int, int>, 7> kEligibleGroups = {{
    {0, 4},   // UNL pot: A-D
    {4, 10},  // Pot 1: E-J
    {0, 10},  // Pots 2-5: A-J
    {0, 10},
    {0, 10},
    {0, 10},
    {5, 10},  // Pot 6: F-J
}};

}  // namespace

QualifierPots form_pots(const OverallRanking& overall) {
  QualifierPots pots;
  int position = 0;
  for (int k = 0; k < 7; ++k) {
    for (int i = 0; i < QualifierPots::kSizes[k]; ++i) {
      pots.pots[k].push_back(overall.positions[position++]);
    }
  }
  return pots;
}

std::array<QGroup, 10> draw_q_groups(const QualifierPots& pots,
                                     RandomStream& rng) {
  std::array<QGroup, 10> groups;
  for (int g = 0; g < 10; ++g) groups[g].label = static_cast<char>('A' + g);
  for (int k = 0; k < 7; ++k) {
    auto drawn = pots.pots[k];
    rng.shuffle(drawn);
    const auto [first, last] = kEligibleGroups[k];
    for (int g = first; g < last; ++g) {
      groups[g].members.push_back(drawn[g - first]);
    }
  }
  return groups;
}

QualifyingStage play_qualifiers(const std::array<QGroup, 10>& groups,
                                const MatchModel& model, RandomStream& rng) {
  QualifyingStage stage;
  stage.groups = groups;
  for (int g = 0; g < 10; ++g) {
    const GroupMatches matches = play_group(view(groups[g].members), model, rng);
    stage.match_count += static_cast<int>(matches.size());
    stage.standings[g] = rank_group(view(groups[g].members), view(matches), rng, g + 1);
    stage.direct_qualifiers[2 * g] = stage.standings[g].placements[0].team;
    stage.direct_qualifiers[2 * g + 1] = stage.standings[g].placements[1].team;
  }
  return stage;
}

}  // namespace euroqual
