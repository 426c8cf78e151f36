#pragma once

#include <random>

#include <wmilnor/wmilnor.hpp>

namespace wmilnor::fixtures {

inline GaussCode full_twist() {
  GaussCode c(2);
  c.strand(1) = {{1, Role::over, 1}, {2, Role::under, 1}};
  c.strand(2) = {{1, Role::under, 1}, {2, Role::over, 1}};
  return c;
}

// Signed count of crossings with strand j over strand i.
inline long long over_count(const GaussCode& code, int j, int i) {
  long long s = 0;
  for (const auto& [id, info] : crossing_map(code))
    if (info.over.strand == j && info.under.strand == i) s += info.sign;
  return s;
}

}  // namespace wmilnor::fixtures
