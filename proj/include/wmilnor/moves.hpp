#pragma once

// Local moves as Gauss-code rewrites: 2n-moves (parallel strands),
// V^n-moves, crossing virtualization.

#include <set>
#include <stdexcept>
#include <string>

#include "gauss_code.hpp"

namespace wmilnor {

// n full twists between two parallel strands: 2n crossings of sign eps,
// strand_a passes over at the odd-numbered ones.
inline GaussCode insert_2n(const GaussCode& code, const MoveSite& site, int n, int eps) {
  if (n < 1) throw std::invalid_argument("2n-move: n must be >= 1");
  if (eps != 1 && eps != -1) throw std::invalid_argument("2n-move: sign must be +1 or -1");
  const int base = code.max_id();
  Strand a, b;
  for (int t = 1; t <= 2 * n; ++t) {
    const bool a_over = t % 2 == 1;
    a.push_back({base + t, a_over ? Role::over : Role::under, eps});
    b.push_back({base + t, a_over ? Role::under : Role::over, eps});
  }
  return insert_blocks(code, site, a, b);
}

namespace detail {

// Ids of a block of `len` passages starting at pos, or empty if out of range.
inline std::vector<Passage> block_at(const GaussCode& code, int strand, int pos, int len) {
  if (strand < 1 || strand > code.m || pos < 0 || pos + len > code.length(strand)) return {};
  const auto& s = code.strand(strand);
  return {s.begin() + pos, s.begin() + pos + len};
}

inline std::set<int> ids_of(const std::vector<Passage>& block) {
  std::set<int> ids;
  for (const auto& p : block) ids.insert(p.id);
  return ids;
}

}  // namespace detail

// Removes the full twists that insert_2n would have placed with blocks
// starting at site.pos_a / site.pos_b of the current code.
inline GaussCode delete_2n(const GaussCode& code, const MoveSite& site, int n) {
  if (n < 1) throw std::invalid_argument("2n-move: n must be >= 1");
  const auto a = detail::block_at(code, site.strand_a, site.pos_a, 2 * n);
  const auto b = detail::block_at(code, site.strand_b, site.pos_b, 2 * n);
  if (a.empty() || b.empty()) throw PatternError("2n-move: site out of range");
  for (int t = 0; t < 2 * n; ++t) {
    const bool a_over = t % 2 == 0;
    const auto &pa = a[static_cast<std::size_t>(t)], &pb = b[static_cast<std::size_t>(t)];
    if (pa.id != pb.id || pa.sign != a[0].sign || pa.role != (a_over ? Role::over : Role::under) ||
        pb.role != (a_over ? Role::under : Role::over))
      throw PatternError("2n-move: site does not hold n full twists");
  }
  const auto ids = detail::ids_of(a);
  if (static_cast<int>(ids.size()) != 2 * n) throw PatternError("2n-move: repeated crossing in block");
  return erase_crossings(code, ids);
}

enum class VnDirection { classicalize, virtualize };

// classicalize: strand_a passes over strand_b n times in a row, sign `sign`.
// virtualize: removes such a block found at the site.
inline GaussCode apply_Vn(const GaussCode& code, int n, VnDirection direction, const MoveSite& site,
                          int sign = 1) {
  if (n < 1) throw std::invalid_argument("V^n-move: n must be >= 1");
  if (direction == VnDirection::classicalize) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("V^n-move: sign must be +1 or -1");
    const int base = code.max_id();
    Strand overs, unders;
    for (int t = 1; t <= n; ++t) {
      overs.push_back({base + t, Role::over, sign});
      unders.push_back({base + t, Role::under, sign});
    }
    return insert_blocks(code, site, overs, unders);
  }
  const auto a = detail::block_at(code, site.strand_a, site.pos_a, n);
  const auto b = detail::block_at(code, site.strand_b, site.pos_b, n);
  if (a.empty() || b.empty()) throw PatternError("V^n-move: site out of range");
  for (int t = 0; t < n; ++t) {
    const auto &pa = a[static_cast<std::size_t>(t)], &pb = b[static_cast<std::size_t>(t)];
    if (pa.id != pb.id || pa.role != Role::over || pb.role != Role::under || pa.sign != a[0].sign)
      throw PatternError("V^n-move: site does not hold n parallel classical crossings");
  }
  return erase_crossings(code, detail::ids_of(a));
}

inline GaussCode virtualize_crossing(const GaussCode& code, int id) {
  const auto cm = crossing_map(code);
  if (!cm.count(id)) throw DiagramError("unknown crossing " + std::to_string(id));
  return erase_crossings(code, {id});
}

inline bool is_self_crossing(const GaussCode& code, int id) {
  const auto cm = crossing_map(code);
  auto it = cm.find(id);
  if (it == cm.end()) throw DiagramError("unknown crossing " + std::to_string(id));
  return it->second.over.strand == it->second.under.strand;
}

}  // namespace wmilnor
