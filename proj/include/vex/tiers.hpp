#pragma once
#include <algorithm>
#include <utility>
#include <vector>

#include "vex/space.hpp"

namespace vex {

// Walks the distance tiers around a center in ascending order, handing each
// tier's member indices to cb(dist, ids, count). Tier 0 is the center alone.
// The tier family matches sorted_tiers: O(1) per tier on grids, one sort with
// 1e-9 relative tie grouping on curves and clouds. Every ball-prefix sweep in
// the operator layer goes through this walk so the ball family is identical
// everywhere.
template <typename Cb>
void for_each_tier(const Space& s, int center, Cb&& cb) {
  if (s.kind == SpaceKind::interval) {
    int ids[2] = {center, center};
    cb(0.0, ids, 1);
    const int mmax = std::max(center, s.n - 1 - center);
    for (int m = 1; m <= mmax; ++m) {
      int cnt = 0;
      if (center - m >= 0) ids[cnt++] = center - m;
      if (center + m < s.n) ids[cnt++] = center + m;
      cb(s.h * m, ids, cnt);
    }
    return;
  }
  if (s.kind == SpaceKind::circle) {
    int ids[2] = {center, center};
    cb(0.0, ids, 1);
    const int half = s.n / 2;
    for (int m = 1; m <= half; ++m) {
      const int a = (center + m) % s.n;
      const int b = ((center - m) % s.n + s.n) % s.n;
      ids[0] = a;
      int cnt = 1;
      if (b != a) ids[cnt++] = b;
      cb(s.h * m, ids, cnt);
    }
    return;
  }
  std::vector<std::pair<double, int>> order(s.n);
  for (int j = 0; j < s.n; ++j) order[j] = {s.dist(center, j), j};
  std::sort(order.begin(), order.end());
  std::vector<int> group;
  std::size_t i = 0;
  while (i < order.size()) {
    const double d = order[i].first;
    group.clear();
    std::size_t j = i;
    while (j < order.size() && order[j].first - d <= 1e-9 * order[j].first) {
      group.push_back(order[j].second);
      ++j;
    }
    cb(d, group.data(), static_cast<int>(group.size()));
    i = j;
  }
}

}  // namespace vex
