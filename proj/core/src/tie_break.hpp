#pragma once

#include <span>

#include "euroqual/random_stream.hpp"

namespace euroqual::detail {

/// Sorts `items` by `key` descending, then permutes every block of equal keys
/// uniformly at random. The sort is stable so the pre-shuffle order does not
/// depend on the standard library; insertion sort because blocks hold at
/// most 16 items and stable_sort would allocate.
template <typename T, typename Key>
void order_with_random_ties(std::span<T> items, Key key, RandomStream& rng) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    T item = std::move(items[i]);
    const auto k = key(item);
    std::size_t j = i;
    for (; j > 0 && key(items[j - 1]) < k; --j) {
      items[j] = std::move(items[j - 1]);
    }
    items[j] = std::move(item);
  }
  std::size_t begin = 0;
  while (begin < items.size()) {
    std::size_t end = begin + 1;
    while (end < items.size() && key(items[end]) == key(items[begin])) ++end;
    if (end - begin > 1) rng.shuffle(items.subspan(begin, end - begin));
    begin = end;
  }
}

}  // namespace euroqual::detail
