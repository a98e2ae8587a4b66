#pragma once

#include <algorithm>
#include <chrono>
#include <vector>

#include "critline/criteria.hpp"

namespace critline::detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// The `count` items with the largest (or smallest) value; ties keep the smaller n.
inline std::vector<ExtremalItem> extreme_items(std::vector<ExtremalItem> items,
                                               std::size_t count, bool largest) {
  const auto cmp = [largest](const ExtremalItem& a, const ExtremalItem& b) {
    if (a.value != b.value) return largest ? a.value > b.value : a.value < b.value;
    return a.n < b.n;
  };
  count = std::min(count, items.size());
  std::partial_sort(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(count),
                    items.end(), cmp);
  items.resize(count);
  return items;
}

}  // namespace critline::detail
