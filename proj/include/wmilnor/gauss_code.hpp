#pragma once

// Welded string link diagrams stored as Gauss codes.
//
// A diagram on m strands is a list of passage sequences, one per strand,
// read from the initial endpoint along the orientation. Only classical
// crossings are recorded; virtual crossings carry no information up to
// welded isotopy and are left implicit. Strands are indexed 1..m in the
// public API, insertion positions ("gaps") are 0..length.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wmilnor {

enum class Role : std::uint8_t { over, under };

struct Passage {
  int id = 0;
  Role role = Role::over;
  int sign = 1;

  friend bool operator==(const Passage&, const Passage&) = default;
};

using Strand = std::vector<Passage>;

class DiagramError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a rewrite site does not match the move's pattern.
class PatternError : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

struct GaussCode {
  int m = 1;
  std::vector<Strand> strands;

  GaussCode() : GaussCode(1) {}
  explicit GaussCode(int strand_count)
      : m(strand_count), strands(static_cast<std::size_t>(std::max(strand_count, 0))) {}
  GaussCode(int strand_count, std::vector<Strand> s) : m(strand_count), strands(std::move(s)) {}

  static GaussCode trivial(int strand_count) { return GaussCode(strand_count); }

  const Strand& strand(int i) const { return strands.at(static_cast<std::size_t>(i - 1)); }
  Strand& strand(int i) { return strands.at(static_cast<std::size_t>(i - 1)); }

  int length(int i) const { return static_cast<int>(strand(i).size()); }

  int crossing_count() const {
    std::size_t n = 0;
    for (const auto& s : strands) n += s.size();
    return static_cast<int>(n / 2);
  }

  int max_id() const {
    int id = 0;
    for (const auto& s : strands)
      for (const auto& p : s) id = std::max(id, p.id);
    return id;
  }

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

struct PassageRef {
  int strand = 0;  // 1-based
  int pos = 0;     // 0-based index into the strand
};

struct CrossingInfo {
  PassageRef over;
  PassageRef under;
  int sign = 1;
};

// Locations of both passages of every crossing. Assumes a valid code.
inline std::map<int, CrossingInfo> crossing_map(const GaussCode& code) {
  std::map<int, CrossingInfo> out;
  for (int i = 1; i <= code.m; ++i) {
    const auto& s = code.strand(i);
    for (int p = 0; p < static_cast<int>(s.size()); ++p) {
      auto& info = out[s[p].id];
      info.sign = s[p].sign;
      (s[p].role == Role::over ? info.over : info.under) = PassageRef{i, p};
    }
  }
  return out;
}

// ---------------------------------------------------------------- validation

struct Violation {
  enum class Kind { strand_count, bad_id, bad_sign, occurrence_count, role_pairing, sign_mismatch };
  Kind kind;
  int crossing_id = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  explicit operator bool() const { return ok(); }

  std::string to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << v.message << '\n';
    return os.str();
  }
};

inline ValidationReport validate(const GaussCode& code) {
  ValidationReport report;
  auto add = [&](Violation::Kind k, int id, std::string msg) {
    report.violations.push_back({k, id, std::move(msg)});
  };
  if (code.m < 1 || static_cast<int>(code.strands.size()) != code.m) {
    add(Violation::Kind::strand_count, 0,
        "strand count " + std::to_string(code.strands.size()) + " does not match m=" +
            std::to_string(code.m));
    if (code.m < 1) return report;
  }

  struct Seen {
    int overs = 0, unders = 0;
    std::set<int> signs;
  };
  std::map<int, Seen> seen;
  for (const auto& s : code.strands) {
    for (const auto& p : s) {
      if (p.id < 1) add(Violation::Kind::bad_id, p.id, "crossing id " + std::to_string(p.id) + " is not positive");
      if (p.sign != 1 && p.sign != -1)
        add(Violation::Kind::bad_sign, p.id,
            "crossing " + std::to_string(p.id) + " has sign " + std::to_string(p.sign));
      auto& e = seen[p.id];
      (p.role == Role::over ? e.overs : e.unders) += 1;
      e.signs.insert(p.sign);
    }
  }
  for (const auto& [id, e] : seen) {
    const std::string name = "crossing " + std::to_string(id);
    if (e.overs + e.unders != 2) {
      add(Violation::Kind::occurrence_count, id,
          name + " appears " + std::to_string(e.overs + e.unders) + " times");
    } else if (e.overs != 1) {
      add(Violation::Kind::role_pairing, id, name + " does not pair one over with one under passage");
    }
    if (e.signs.size() > 1) add(Violation::Kind::sign_mismatch, id, name + " has inconsistent signs");
  }
  return report;
}

inline void require_valid(const GaussCode& code) {
  auto report = validate(code);
  if (!report) throw DiagramError("invalid Gauss code: " + report.to_string());
}

// ------------------------------------------------------------ basic algebra

inline GaussCode stack(const GaussCode& a, const GaussCode& b) {
  if (a.m != b.m)
    throw DiagramError("stack: strand counts differ (" + std::to_string(a.m) + " vs " +
                       std::to_string(b.m) + ")");
  GaussCode out = a;
  const int shift = a.max_id();
  for (int i = 1; i <= a.m; ++i)
    for (auto p : b.strand(i)) {
      p.id += shift;
      out.strand(i).push_back(p);
    }
  return out;
}

// Renumbers crossings by first appearance, strand-major then position.
inline GaussCode canonical_relabel(const GaussCode& code) {
  std::map<int, int> ids;
  GaussCode out = code;
  for (auto& s : out.strands)
    for (auto& p : s) {
      auto [it, fresh] = ids.try_emplace(p.id, static_cast<int>(ids.size()) + 1);
      p.id = it->second;
    }
  return out;
}

inline GaussCode erase_crossings(const GaussCode& code, const std::set<int>& ids) {
  GaussCode out = code;
  for (auto& s : out.strands)
    std::erase_if(s, [&](const Passage& p) { return ids.count(p.id) != 0; });
  return out;
}

// Two insertion sites; used by the R2 rewrite and the local moves.
struct MoveSite {
  int strand_a = 1;
  int pos_a = 0;
  int strand_b = 2;
  int pos_b = 0;
};

inline void check_site(const GaussCode& code, int strand, int pos) {
  if (strand < 1 || strand > code.m)
    throw DiagramError("strand " + std::to_string(strand) + " out of range");
  if (pos < 0 || pos > code.length(strand))
    throw DiagramError("position " + std::to_string(pos) + " out of range on strand " +
                       std::to_string(strand));
}

// Inserts block_a at (strand_a, pos_a) and block_b at (strand_b, pos_b),
// positions referring to the input code. On a shared gap block_a goes first.
inline GaussCode insert_blocks(const GaussCode& code, const MoveSite& site, const Strand& block_a,
                               const Strand& block_b) {
  check_site(code, site.strand_a, site.pos_a);
  check_site(code, site.strand_b, site.pos_b);
  GaussCode out = code;
  auto put = [&](int strand, int pos, const Strand& block) {
    auto& s = out.strand(strand);
    s.insert(s.begin() + pos, block.begin(), block.end());
  };
  if (site.strand_a == site.strand_b && site.pos_a <= site.pos_b) {
    put(site.strand_b, site.pos_b, block_b);
    put(site.strand_a, site.pos_a, block_a);
  } else {
    put(site.strand_a, site.pos_a, block_a);
    put(site.strand_b, site.pos_b, block_b);
  }
  return out;
}

// ------------------------------------------------------ welded Reidemeister

enum class MoveKind { R1, R2, R3, OC };

struct R1Insert {
  int strand = 1;
  int pos = 0;
  int sign = 1;
  bool over_first = true;
};
struct R1Delete {
  int id = 0;
};
// Over pair goes to site.strand_a, under pair to site.strand_b.
struct R2Insert {
  MoveSite site;
  int sign = 1;
  bool under_reversed = false;
};
struct R2Delete {
  int id1 = 0;
  int id2 = 0;
};
// a: top over middle, b: top over bottom, c: middle over bottom.
struct R3Move {
  int a = 0, b = 0, c = 0;
};
struct OCSwap {
  int strand = 1;
  int pos = 0;
};

using Rewrite = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Move, OCSwap>;

inline MoveKind kind_of(const Rewrite& r) {
  switch (r.index()) {
    case 0:
    case 1: return MoveKind::R1;
    case 2:
    case 3: return MoveKind::R2;
    case 4: return MoveKind::R3;
    default: return MoveKind::OC;
  }
}

namespace detail {

inline bool adjacent(const PassageRef& x, const PassageRef& y) {
  return x.strand == y.strand && (x.pos + 1 == y.pos || y.pos + 1 == x.pos);
}

inline const CrossingInfo& lookup(const std::map<int, CrossingInfo>& cm, int id) {
  auto it = cm.find(id);
  if (it == cm.end()) throw PatternError("unknown crossing " + std::to_string(id));
  return it->second;
}

inline bool r1_matches(const std::map<int, CrossingInfo>& cm, int id) {
  auto it = cm.find(id);
  return it != cm.end() && adjacent(it->second.over, it->second.under);
}

inline bool r2_matches(const std::map<int, CrossingInfo>& cm, int id1, int id2) {
  if (id1 == id2) return false;
  auto a = cm.find(id1), b = cm.find(id2);
  if (a == cm.end() || b == cm.end()) return false;
  return a->second.sign == -b->second.sign && adjacent(a->second.over, b->second.over) &&
         adjacent(a->second.under, b->second.under);
}

inline bool after(const PassageRef& x, const PassageRef& y) { return x.pos > y.pos; }

// Group-level condition: the bottom strand's two letters commute past the
// middle strand's conjugation exactly when this sign relation holds.
inline bool r3_matches(const std::map<int, CrossingInfo>& cm, int a, int b, int c) {
  if (a == b || b == c || a == c) return false;
  auto ia = cm.find(a), ib = cm.find(b), ic = cm.find(c);
  if (ia == cm.end() || ib == cm.end() || ic == cm.end()) return false;
  const auto &A = ia->second, &B = ib->second, &C = ic->second;
  if (!adjacent(A.over, B.over) || !adjacent(A.under, C.over) || !adjacent(B.under, C.under))
    return false;
  const bool same_order = after(C.over, A.under) == after(C.under, B.under);
  return same_order ? A.sign == B.sign : A.sign == -B.sign;
}

inline void swap_pair(GaussCode& code, const PassageRef& x, const PassageRef& y) {
  auto& s = code.strand(x.strand);
  std::swap(s[static_cast<std::size_t>(x.pos)], s[static_cast<std::size_t>(y.pos)]);
}

}  // namespace detail

inline GaussCode reidemeister(const GaussCode& code, const Rewrite& move) {
  return std::visit(
      [&](const auto& mv) -> GaussCode {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, R1Insert>) {
          check_site(code, mv.strand, mv.pos);
          if (mv.sign != 1 && mv.sign != -1) throw DiagramError("R1: sign must be +1 or -1");
          const int id = code.max_id() + 1;
          Passage o{id, Role::over, mv.sign}, u{id, Role::under, mv.sign};
          GaussCode out = code;
          auto& s = out.strand(mv.strand);
          Strand block = mv.over_first ? Strand{o, u} : Strand{u, o};
          s.insert(s.begin() + mv.pos, block.begin(), block.end());
          return out;
        } else if constexpr (std::is_same_v<T, R1Delete>) {
          if (!detail::r1_matches(crossing_map(code), mv.id))
            throw PatternError("R1: crossing " + std::to_string(mv.id) + " is not a kink");
          return erase_crossings(code, {mv.id});
        } else if constexpr (std::is_same_v<T, R2Insert>) {
          if (mv.sign != 1 && mv.sign != -1) throw DiagramError("R2: sign must be +1 or -1");
          const int id = code.max_id() + 1;
          Strand overs{{id, Role::over, mv.sign}, {id + 1, Role::over, -mv.sign}};
          Strand unders{{id, Role::under, mv.sign}, {id + 1, Role::under, -mv.sign}};
          if (mv.under_reversed) std::swap(unders[0], unders[1]);
          return insert_blocks(code, mv.site, overs, unders);
        } else if constexpr (std::is_same_v<T, R2Delete>) {
          if (!detail::r2_matches(crossing_map(code), mv.id1, mv.id2))
            throw PatternError("R2: crossings do not form a bigon");
          return erase_crossings(code, {mv.id1, mv.id2});
        } else if constexpr (std::is_same_v<T, R3Move>) {
          const auto cm = crossing_map(code);
          if (!detail::r3_matches(cm, mv.a, mv.b, mv.c))
            throw PatternError("R3: crossings do not form a triangle");
          const auto &A = cm.at(mv.a), &B = cm.at(mv.b), &C = cm.at(mv.c);
          GaussCode out = code;
          detail::swap_pair(out, A.over, B.over);
          detail::swap_pair(out, A.under, C.over);
          detail::swap_pair(out, B.under, C.under);
          return out;
        } else {
          check_site(code, mv.strand, mv.pos);
          const auto& s = code.strand(mv.strand);
          if (mv.pos + 1 >= static_cast<int>(s.size()) || s[mv.pos].role != Role::over ||
              s[mv.pos + 1].role != Role::over)
            throw PatternError("OC: no adjacent over-passages at the site");
          GaussCode out = code;
          detail::swap_pair(out, {mv.strand, mv.pos}, {mv.strand, mv.pos + 1});
          return out;
        }
      },
      move);
}

// Every deletion, R3 and OC rewrite applicable to the code.
inline std::vector<Rewrite> find_sites(const GaussCode& code) {
  std::vector<Rewrite> out;
  const auto cm = crossing_map(code);
  for (const auto& [id, info] : cm)
    if (detail::r1_matches(cm, id)) out.push_back(R1Delete{id});
  for (int i = 1; i <= code.m; ++i) {
    const auto& s = code.strand(i);
    for (int p = 0; p + 1 < static_cast<int>(s.size()); ++p) {
      const auto &x = s[p], &y = s[p + 1];
      if (x.role == Role::over && y.role == Role::over) {
        out.push_back(OCSwap{i, p});
        if (detail::r2_matches(cm, x.id, y.id)) out.push_back(R2Delete{x.id, y.id});
      }
      if (x.role == Role::under && y.role == Role::under) {
        // (x, y) as the bottom pair in either role assignment
        for (auto [b, c] : {std::pair{x.id, y.id}, std::pair{y.id, x.id}}) {
          const auto& oc = cm.at(c).over;
          const auto& cs = code.strand(oc.strand);
          for (int q : {oc.pos - 1, oc.pos + 1}) {
            if (q < 0 || q >= static_cast<int>(cs.size()) || cs[q].role != Role::under) continue;
            const int a = cs[q].id;
            if (detail::r3_matches(cm, a, b, c)) out.push_back(R3Move{a, b, c});
          }
        }
      }
    }
  }
  return out;
}

// Random welded isotopy: `steps` applicable rewrites, deterministic per seed.
inline GaussCode scramble(const GaussCode& code, int steps, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GaussCode cur = code;
  for (int step = 0; step < steps; ++step) {
    auto sites = find_sites(cur);
    std::vector<Rewrite> r3s;
    for (const auto& s : sites)
      if (std::holds_alternative<R3Move>(s)) r3s.push_back(s);
    const int branch = pick(0, 3);
    if (!r3s.empty() && branch == 0) {
      cur = reidemeister(cur, r3s[static_cast<std::size_t>(pick(0, static_cast<int>(r3s.size()) - 1))]);
    } else if (!sites.empty() && branch == 1) {
      cur = reidemeister(cur, sites[static_cast<std::size_t>(pick(0, static_cast<int>(sites.size()) - 1))]);
    } else {
      const int sign = pick(0, 1) ? 1 : -1;
      if (pick(0, 2) == 0) {
        const int i = pick(1, cur.m);
        cur = reidemeister(cur, R1Insert{i, pick(0, cur.length(i)), sign, pick(0, 1) == 1});
      } else {
        MoveSite site;
        site.strand_a = pick(1, cur.m);
        site.pos_a = pick(0, cur.length(site.strand_a));
        site.strand_b = pick(1, cur.m);
        site.pos_b = pick(0, cur.length(site.strand_b));
        cur = reidemeister(cur, R2Insert{site, sign, pick(0, 1) == 1});
      }
    }
  }
  return cur;
}

// Random diagram with the given number of crossings; endpoints and signs uniform.
template <class Rng>
GaussCode random_code(Rng& rng, int m, int crossings) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GaussCode code(m);
  for (int id = 1; id <= crossings; ++id) {
    const int sign = pick(0, 1) ? 1 : -1;
    const int a = pick(1, m);
    auto& sa = code.strand(a);
    sa.insert(sa.begin() + pick(0, static_cast<int>(sa.size())), Passage{id, Role::over, sign});
    const int b = pick(1, m);
    auto& sb = code.strand(b);
    sb.insert(sb.begin() + pick(0, static_cast<int>(sb.size())), Passage{id, Role::under, sign});
  }
  return code;
}

}  // namespace wmilnor
