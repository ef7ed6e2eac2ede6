#include "euroqual/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace euroqual {

namespace {

std::string describe(const TeamRecord& r) {
  return "'" + r.name + "' (rank " + std::to_string(r.uefa_rank) + ")";
}

}  // namespace

std::optional<TeamId> TeamSet::find(std::string_view name) const {
  for (const Team& t : teams_) {
    if (t.name == name) return t.id;
  }
  return std::nullopt;
}

void TeamSet::index_ranks() {
  for (const Team& t : teams_) by_rank_[t.uefa_rank - 1] = t.id;
}

TeamSet build_team_set(std::span<const TeamRecord> records) {
  if (records.size() != kNumTeams) {
    throw TeamSetError("expected 55 teams, got " +
                       std::to_string(records.size()));
  }
  std::array<const TeamRecord*, kNumTeams> slot{};
  for (const TeamRecord& r : records) {
    if (r.name.empty()) {
      throw TeamSetError("team with rank " + std::to_string(r.uefa_rank) +
                         " has an empty name");
    }
    if (r.uefa_rank < 1 || r.uefa_rank > kNumTeams) {
      throw TeamSetError("rank " + std::to_string(r.uefa_rank) + " of " +
                         describe(r) + " is outside 1..55");
    }
    if (!(r.elo > 0.0) || !std::isfinite(r.elo)) {
      throw TeamSetError("non-positive elo for " + describe(r));
    }
    const TeamRecord*& s = slot[r.uefa_rank - 1];
    if (s != nullptr) {
      throw TeamSetError("duplicate rank " + std::to_string(r.uefa_rank) +
                         ": " + describe(*s) + " and " + describe(r));
    }
    s = &r;
  }
  // With 55 records and no duplicates inside 1..55 every rank is present.

  TeamSet set;
  set.teams_.reserve(kNumTeams);
  for (int rank = 1; rank <= kNumTeams; ++rank) {
    const TeamRecord& r = *slot[rank - 1];
    if (set.find(r.name)) {
      throw TeamSetError("duplicate team name '" + r.name + "'");
    }
    set.teams_.push_back(Team{rank - 1, r.name, r.uefa_rank, r.elo});
  }
  set.index_ranks();
  return set;
}

TeamSet apply_counterfactual(const TeamSet& teams, TeamId subject,
                             int target_rank) {
  if (target_rank < 1 || target_rank > kNumTeams) {
    throw std::invalid_argument("target rank " + std::to_string(target_rank) +
                                " is outside 1..55");
  }
  if (subject < 0 || subject >= teams.size()) {
    throw std::invalid_argument("unknown team id " + std::to_string(subject));
  }
  TeamSet out = teams;
  const TeamId occupant = teams.at_rank(target_rank);
  std::swap(out.teams_[subject].uefa_rank, out.teams_[occupant].uefa_rank);
  out.index_ranks();
  return out;
}

std::string_view to_string(PathPolicy policy) {
  switch (policy) {
    case PathPolicy::kRegular:
      return "regular";
    case PathPolicy::kRandom:
      return "random";
    case PathPolicy::kSeeded:
      return "seeded";
  }
  return "unknown";
}

std::optional<PathPolicy> parse_path_policy(std::string_view text) {
  if (text == "regular") return PathPolicy::kRegular;
  if (text == "random") return PathPolicy::kRandom;
  if (text == "seeded") return PathPolicy::kSeeded;
  return std::nullopt;
}

void SimConfig::validate() const {
  if (!(s > 0.0)) throw std::invalid_argument("scale s must be positive");
  if (!(home_advantage >= 0.0)) {
    throw std::invalid_argument("home advantage must be non-negative");
  }
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
}

}  // namespace euroqual
