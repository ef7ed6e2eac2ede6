#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace euroqual {

inline constexpr int kNumTeams = 55;

/// Dense team index. Ids are assigned in initial coefficient-rank order when
/// a TeamSet is built, so id 0 is the rank-1 team of the input file.
using TeamId = int;

enum class Tier : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<Tier, 4> kTiers = {Tier::A, Tier::B, Tier::C,
                                               Tier::D};

constexpr int tier_index(Tier t) { return static_cast<int>(t); }
constexpr char tier_letter(Tier t) { return "ABCD"[tier_index(t)]; }

/// Number of teams in each Nations League tier.
constexpr int league_size(Tier t) {
  constexpr std::array<int, 4> sizes = {12, 12, 15, 16};
  return sizes[tier_index(t)];
}

/// First (1-based) rank / overall position of a tier's block.
constexpr int league_first_position(Tier t) {
  constexpr std::array<int, 4> first = {1, 13, 25, 40};
  return first[tier_index(t)];
}

/// Tier whose block of ranks 1..55 contains `rank`.
constexpr Tier tier_of_position(int rank) {
  if (rank <= 12) return Tier::A;
  if (rank <= 24) return Tier::B;
  if (rank <= 39) return Tier::C;
  return Tier::D;
}

struct Team {
  TeamId id = 0;
  std::string name;
  int uefa_rank = 0;
  double elo = 0.0;

  friend bool operator==(const Team&, const Team&) = default;
};

/// Raw input row before validation.
struct TeamRecord {
  std::string name;
  int uefa_rank = 0;
  double elo = 0.0;
};

class TeamSetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The 55 participants. Immutable once built.
class TeamSet {
 public:
  const Team& operator[](TeamId id) const { return teams_[id]; }
  std::span<const Team> teams() const { return teams_; }
  int size() const { return static_cast<int>(teams_.size()); }

  /// Team currently holding initial coefficient rank `rank` (1..55).
  TeamId at_rank(int rank) const { return by_rank_.at(rank - 1); }

  /// Case-sensitive lookup by name.
  std::optional<TeamId> find(std::string_view name) const;

  friend bool operator==(const TeamSet&, const TeamSet&) = default;

 private:
  friend TeamSet build_team_set(std::span<const TeamRecord> records);
  friend TeamSet apply_counterfactual(const TeamSet& teams, TeamId subject,
                                      int target_rank);

  void index_ranks();

  std::vector<Team> teams_;
  std::array<TeamId, kNumTeams> by_rank_{};
};

/// Validates 55 records and assigns dense ids in rank order.
/// Throws TeamSetError naming the offending record.
TeamSet build_team_set(std::span<const TeamRecord> records);

/// Exchanges the initial rank of `subject` with whoever holds `target_rank`.
/// Ratings and every other rank stay put.
TeamSet apply_counterfactual(const TeamSet& teams, TeamId subject,
                             int target_rank);

struct MatchRecord {
  TeamId home = 0;
  TeamId away = 0;
  TeamId winner = 0;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

enum class PathPolicy : std::uint8_t { kRegular, kRandom, kSeeded };

std::string_view to_string(PathPolicy policy);
std::optional<PathPolicy> parse_path_policy(std::string_view text);

struct RankSwap {
  std::string team;
  int target_rank = 0;

  friend bool operator==(const RankSwap&, const RankSwap&) = default;
};

struct SimConfig {
  double s = 400.0;
  double home_advantage = 100.0;
  std::uint64_t iterations = 1'000'000;
  std::uint64_t master_seed = 20171206;
  PathPolicy path_policy = PathPolicy::kRegular;
  /// Applied to the TeamSet before simulating when set.
  std::optional<RankSwap> counterfactual;
  /// Run the full structural check on every simulated season, not only the
  /// 24-finalist count.
  bool check_structure = false;
  /// 0 selects std::thread::hardware_concurrency(). Results never depend on it.
  unsigned workers = 0;

  /// Throws std::invalid_argument on s <= 0, negative home advantage or zero
  /// iterations.
  void validate() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// The 1..55 Nations League overall ranking plus per-team lookups derived
/// from it.
struct OverallRanking {
  /// positions[i] holds the team in overall position i + 1.
  std::array<TeamId, kNumTeams> positions{};
  /// position_of[id] is the 1-based overall position of team `id`.
  std::array<int, kNumTeams> position_of{};
  std::array<bool, kNumTeams> group_winner{};

  Tier league_of(TeamId id) const {
    return tier_of_position(position_of[id]);
  }
};

}  // namespace euroqual
