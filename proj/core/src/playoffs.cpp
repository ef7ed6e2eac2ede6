#include "euroqual/playoffs.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/container/static_vector.hpp>

namespace euroqual {

namespace {

using Bucket = boost::container::static_vector<PlayoffEntrant, 16>;

std::span<const PlayoffEntrant> view(const Bucket& b) {
  return {b.data(), b.size()};
}

void sort_by_label(std::array<PlayoffPath, 4>& paths) {
  std::sort(paths.begin(), paths.end(),
            [](const PlayoffPath& a, const PlayoffPath& b) {
              return tier_index(a.label) < tier_index(b.label);
            });
}

void sort_seeds(PlayoffPath& path) {
  std::sort(path.entrants.begin(), path.entrants.end(),
            [](const PlayoffEntrant& a, const PlayoffEntrant& b) {
              return a.overall_position < b.overall_position;
            });
}

PlayoffPath make_path(Tier label, std::span<const PlayoffEntrant> four) {
  PlayoffPath path;
  path.label = label;
  std::copy(four.begin(), four.end(), path.entrants.begin());
  sort_seeds(path);
  return path;
}

Bucket gather(std::span<const PlayoffEntrant> pool, unsigned mask) {
  Bucket out;
  for (unsigned m = mask; m != 0; m &= m - 1) {
    out.push_back(pool[std::countr_zero(m)]);
  }
  return out;
}

// Calls visit(groups) for every split of `remaining` into `k - depth` further
// unordered groups of four. Each group holds the lowest remaining index, so
// each split is produced exactly once.
template <typename Visit>
void enumerate_splits(unsigned remaining, int depth, int k,
                      std::array<unsigned, 3>& groups, Visit& visit) {
  if (depth == k) {
    visit(groups);
    return;
  }
  const unsigned lead = remaining & (~remaining + 1);
  const unsigned rest = remaining & ~lead;
  std::array<int, 16> idx{};
  int n = 0;
  for (unsigned m = rest; m != 0; m &= m - 1) idx[n++] = std::countr_zero(m);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const unsigned group =
            lead | (1u << idx[a]) | (1u << idx[b]) | (1u << idx[c]);
        groups[depth] = group;
        enumerate_splits(remaining & ~group, depth + 1, k, groups, visit);
      }
    }
  }
}

}  // namespace

PlayoffEntrants select_playoff_teams(
    const OverallRanking& overall, std::span<const TeamId> direct_qualifiers) {
  std::array<bool, kNumTeams> unavailable{};
  for (TeamId id : direct_qualifiers) unavailable[id] = true;

  std::array<Bucket, 4> quota;
  auto take_from = [&](Tier league, Tier source) {
    const int first = league_first_position(league);
    for (int pos = first; pos < first + league_size(league); ++pos) {
      const TeamId id = overall.positions[pos - 1];
      if (unavailable[id]) continue;
      unavailable[id] = true;
      quota[tier_index(source)].push_back(PlayoffEntrant{
          id, source, league, overall.group_winner[id], pos});
      return true;
    }
    return false;
  };

  // Group winners lead each league block, so league order already puts the
  // available winners first.
  for (Tier t : kTiers) {
    while (quota[tier_index(t)].size() < 4 && take_from(t, t)) {
    }
  }
  for (Tier t : kTiers) {
    const int l = tier_index(t);
    while (quota[l].size() < 4) {
      bool filled = false;
      for (int m = l + 1; m < 4 && !filled; ++m) {
        filled = take_from(kTiers[m], t);
      }
      for (int m = 3; m >= 0 && !filled; --m) {
        if (m != l) filled = take_from(kTiers[m], t);
      }
      if (!filled) {
        throw std::logic_error("fewer than 16 teams available for play-offs");
      }
    }
  }

  PlayoffEntrants entrants;
  std::size_t k = 0;
  for (const Bucket& b : quota) {
    for (const PlayoffEntrant& e : b) entrants[k++] = e;
  }
  return entrants;
}

int group_winner_conflicts(std::span<const PlayoffEntrant> entrants) {
  int best_league = 4;
  for (const PlayoffEntrant& e : entrants) {
    best_league = std::min(best_league, tier_index(e.league));
  }
  int conflicts = 0;
  for (const PlayoffEntrant& e : entrants) {
    if (e.group_winner && tier_index(e.league) > best_league) ++conflicts;
  }
  return conflicts;
}

PathFormation form_paths_regular(const PlayoffEntrants& entrants,
                                 RandomStream& rng) {
  std::array<Bucket, 4> by_league;
  for (const PlayoffEntrant& e : entrants) {
    by_league[tier_index(e.league)].push_back(e);
  }

  // A league with four or more entrants keeps its own path: all of its group
  // winners plus `need` of its other entrants, one bitmask over `others` per
  // way of choosing them.
  struct OwnPath {
    Tier label = Tier::A;
    Bucket winners;
    Bucket others;
    boost::container::small_vector<unsigned, 4> fills;
  };
  boost::container::static_vector<OwnPath, 4> own;
  boost::container::static_vector<Tier, 4> open_labels;
  Bucket small;  // entrants of leagues with fewer than four
  for (Tier t : kTiers) {
    const Bucket& members = by_league[tier_index(t)];
    if (members.size() < 4) {
      open_labels.push_back(t);
      small.insert(small.end(), members.begin(), members.end());
      continue;
    }
    OwnPath path;
    path.label = t;
    for (const PlayoffEntrant& e : members) {
      (e.group_winner ? path.winners : path.others).push_back(e);
    }
    const int need = 4 - static_cast<int>(path.winners.size());
    for (unsigned m = 0; m < (1u << path.others.size()); ++m) {
      if (std::popcount(m) == need) path.fills.push_back(m);
    }
    own.push_back(std::move(path));
  }
  const int k = static_cast<int>(open_labels.size());

  // Calls visit(fill, leftover, split, conflicts) for every arrangement.
  // Own paths never hold a conflict; only the open paths are scored.
  auto for_each_arrangement = [&](auto&& visit) {
    std::array<std::size_t, 4> fill{};
    while (true) {
      Bucket leftover = small;
      for (std::size_t o = 0; o < own.size(); ++o) {
        const unsigned taken = own[o].fills[fill[o]];
        for (std::size_t i = 0; i < own[o].others.size(); ++i) {
          if (!(taken & (1u << i))) leftover.push_back(own[o].others[i]);
        }
      }
      std::array<unsigned, 3> split{};
      if (k <= 1) {
        split[0] = (1u << leftover.size()) - 1;
        visit(fill, leftover, split,
              k == 0 ? 0 : group_winner_conflicts(view(leftover)));
      } else {
        auto score = [&](const std::array<unsigned, 3>& g) {
          int c = 0;
          for (int i = 0; i < k; ++i) {
            c += group_winner_conflicts(view(gather(view(leftover), g[i])));
          }
          visit(fill, leftover, g, c);
        };
        enumerate_splits((1u << leftover.size()) - 1, 0, k, split, score);
      }
      // Odometer over the own-path fills.
      std::size_t o = 0;
      while (o < own.size() && ++fill[o] == own[o].fills.size()) fill[o++] = 0;
      if (o == own.size()) break;
    }
  };

  int best = 1 << 30;
  std::uint64_t ties = 0;
  for_each_arrangement([&](const auto&, const Bucket&, const auto&, int c) {
    if (c < best) {
      best = c;
      ties = 0;
    }
    if (c == best) ++ties;
  });
  std::uint64_t target = ties > 1 ? rng.below(ties) : 0;

  PathFormation out;
  out.relaxed_conflicts = best;
  for_each_arrangement([&](const std::array<std::size_t, 4>& fill,
                           const Bucket& leftover,
                           const std::array<unsigned, 3>& split, int c) {
    if (c != best || target-- != 0) return;
    int next = 0;
    for (std::size_t o = 0; o < own.size(); ++o) {
      Bucket four = own[o].winners;
      const Bucket chosen =
          gather(view(own[o].others), own[o].fills[fill[o]]);
      four.insert(four.end(), chosen.begin(), chosen.end());
      out.paths[next++] = make_path(own[o].label, view(four));
    }
    // Open labels go to the open paths in order of their top seed.
    std::array<PlayoffPath, 3> open_paths;
    for (int i = 0; i < k; ++i) {
      open_paths[i] =
          make_path(open_labels[i], view(gather(view(leftover), split[i])));
    }
    std::sort(open_paths.begin(), open_paths.begin() + k,
              [](const PlayoffPath& a, const PlayoffPath& b) {
                return a.entrants[0].overall_position <
                       b.entrants[0].overall_position;
              });
    for (int i = 0; i < k; ++i) {
      open_paths[i].label = open_labels[i];
      out.paths[next++] = open_paths[i];
    }
  });
  sort_by_label(out.paths);
  return out;
}

PathFormation form_paths_random(const PlayoffEntrants& entrants,
                                RandomStream& rng) {
  PlayoffEntrants drawn = entrants;
  rng.shuffle(drawn);
  PathFormation out;
  for (int p = 0; p < 4; ++p) {
    out.paths[p].label = kTiers[p];
    std::copy_n(drawn.begin() + 4 * p, 4, out.paths[p].entrants.begin());
  }
  return out;
}

PathFormation form_paths_seeded(const PlayoffEntrants& entrants,
                                RandomStream& rng) {
  PlayoffEntrants sorted = entrants;
  std::sort(sorted.begin(), sorted.end(),
            [](const PlayoffEntrant& a, const PlayoffEntrant& b) {
              return a.overall_position < b.overall_position;
            });
  PathFormation out;
  for (int p = 0; p < 4; ++p) out.paths[p].label = kTiers[p];
  for (int pot = 0; pot < 4; ++pot) {
    auto members = std::span(sorted).subspan(4 * pot, 4);
    rng.shuffle(members);
    for (int p = 0; p < 4; ++p) out.paths[p].entrants[pot] = members[p];
  }
  return out;
}

PathFormation form_paths(PathPolicy policy, const PlayoffEntrants& entrants,
                         RandomStream& rng) {
  switch (policy) {
    case PathPolicy::kRegular:
      return form_paths_regular(entrants, rng);
    case PathPolicy::kRandom:
      return form_paths_random(entrants, rng);
    case PathPolicy::kSeeded:
      return form_paths_seeded(entrants, rng);
  }
  throw std::invalid_argument("unknown path policy");
}

PathResult play_path(const PlayoffPath& path, const MatchModel& model,
                     RandomStream& rng) {
  PathResult result;
  result.host_semifinal = static_cast<int>(rng.below(2)) + 1;
  const auto& e = path.entrants;
  result.matches[0] = model.play(e[0].team, e[3].team, rng);
  result.matches[1] = model.play(e[1].team, e[2].team, rng);
  const TeamId sf1 = result.matches[0].winner;
  const TeamId sf2 = result.matches[1].winner;
  result.matches[2] = result.host_semifinal == 1 ? model.play(sf1, sf2, rng)
                                                 : model.play(sf2, sf1, rng);
  result.winner = result.matches[2].winner;
  return result;
}

}  // namespace euroqual
