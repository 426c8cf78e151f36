#pragma once

// Welded Milnor invariants from a Gauss code: Wirtinger presentation,
// Milnor's eta_q recursion for the longitudes, Magnus coefficients.
//
// Two evaluation routes are provided. The word route (eta, longitude,
// milnor) follows the recursion on free group words literally. The series
// route (longitude_series, invariant_table) runs the same recursion on
// Magnus images, which is exact because E is a homomorphism into the
// truncated ring, and stays polynomial in the crossing count.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "free_group.hpp"
#include "gauss_code.hpp"
#include "magnus.hpp"

namespace wmilnor {

using Sequence = std::vector<int>;
using ArcKey = std::pair<int, int>;  // (strand i, arc j)

struct WirtingerData {
  int m = 1;
  std::vector<int> arcs;          // r(i) at index i-1
  std::map<ArcKey, Letter> u;     // u_{ij}, 1 <= j < r(i), over Wirtinger generators

  int r(int i) const { return arcs.at(static_cast<std::size_t>(i - 1)); }
  const Letter& u_at(int i, int j) const { return u.at({i, j}); }

  // Zero-framing exponent s of the preferred longitude a_{i1}^s v_{i,r(i)-1}.
  int framing(int i) const {
    int s = 0;
    for (int j = 1; j < r(i); ++j) {
      const auto& l = u_at(i, j);
      if (l.gen.strand == i) s -= l.exp;
    }
    return s;
  }
};

inline WirtingerData wirtinger(const GaussCode& code) {
  require_valid(code);
  WirtingerData data;
  data.m = code.m;
  data.arcs.assign(static_cast<std::size_t>(code.m), 1);

  // arc label of every over-passage
  std::map<int, Gen> over_arc;
  for (int i = 1; i <= code.m; ++i) {
    int arc = 1;
    for (const auto& p : code.strand(i)) {
      if (p.role == Role::under)
        ++arc;
      else
        over_arc.emplace(p.id, Gen::wirtinger(i, arc));
    }
    data.arcs[static_cast<std::size_t>(i - 1)] = arc;
  }
  for (int i = 1; i <= code.m; ++i) {
    int j = 0;
    for (const auto& p : code.strand(i))
      if (p.role == Role::under) data.u.emplace(ArcKey{i, ++j}, Letter{over_arc.at(p.id), p.sign});
  }
  return data;
}

// ------------------------------------------------------------- word route

// phi o eta_q on every arc generator, as words over meridians.
inline std::map<ArcKey, Word> eta(const WirtingerData& data, int q) {
  if (q < 1) throw std::invalid_argument("eta: q must be >= 1");
  std::map<ArcKey, Word> cur;
  for (int i = 1; i <= data.m; ++i)
    for (int j = 1; j <= data.r(i); ++j) cur[{i, j}] = Word::of(Gen::meridian(i));

  for (int level = 2; level <= q; ++level) {
    std::map<ArcKey, Word> next;
    for (int i = 1; i <= data.m; ++i) {
      const Word meridian = Word::of(Gen::meridian(i));
      next[{i, 1}] = meridian;
      Word v;
      for (int j = 1; j < data.r(i); ++j) {
        const auto& l = data.u_at(i, j);
        const Word& img = cur.at({l.gen.strand, l.gen.arc});
        v *= l.exp > 0 ? img : invert(img);
        next[{i, j + 1}] = conjugate(meridian, v);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

// phi o eta_q of the preferred longitude of strand i. framing_shift offsets
// the zero-framing exponent.
inline Word longitude(const WirtingerData& data, int i, int q, int framing_shift = 0) {
  if (i < 1 || i > data.m) throw std::out_of_range("longitude: strand index out of range");
  const auto images = eta(data, q);
  Word lambda = power(Word::of(Gen::meridian(i)), data.framing(i) + framing_shift);
  for (int j = 1; j < data.r(i); ++j) {
    const auto& l = data.u_at(i, j);
    const Word& img = images.at({l.gen.strand, l.gen.arc});
    lambda *= l.exp > 0 ? img : invert(img);
  }
  return lambda;
}

inline void check_sequence(const Sequence& seq, int m) {
  if (seq.size() < 2) throw std::invalid_argument("Milnor sequence must have length >= 2");
  for (int v : seq)
    if (v < 1 || v > m)
      throw std::invalid_argument("sequence entry " + std::to_string(v) + " outside 1.." + std::to_string(m));
}

// mu^w(I) through the word route with eta depth q >= |I|.
inline BigInt milnor_at_depth(const GaussCode& code, const Sequence& seq, int q, int framing_shift = 0) {
  check_sequence(seq, code.m);
  if (q < static_cast<int>(seq.size())) throw std::invalid_argument("milnor: eta depth below sequence length");
  const auto data = wirtinger(code);
  const int k = static_cast<int>(seq.size()) - 1;
  const Word lambda = longitude(data, seq.back(), q, framing_shift);
  const TruncSeries e = magnus_expand(lambda, code.m, k);
  return e.coefficient(Monomial(seq.begin(), seq.end() - 1));
}

inline BigInt milnor(const GaussCode& code, const Sequence& seq) {
  return milnor_at_depth(code, seq, static_cast<int>(seq.size()));
}

// ----------------------------------------------------------- series route

// E(lambda_i) for every strand, eta depth `depth`, truncation `trunc`.
inline std::vector<TruncSeries> longitude_series(const WirtingerData& data, int depth, int trunc,
                                                 int framing_shift = 0) {
  if (depth < 1) throw std::invalid_argument("longitude_series: depth must be >= 1");
  const int m = data.m;
  struct Image {
    TruncSeries fwd, inv;
  };
  std::map<ArcKey, Image> cur;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= data.r(i); ++j)
      cur.insert_or_assign({i, j}, Image{TruncSeries::letter(m, trunc, i, 1), TruncSeries::letter(m, trunc, i, -1)});

  // Walks strand i's u letters at the current level, reporting each prefix.
  auto walk = [&](int i, auto&& on_prefix) {
    TruncSeries v = TruncSeries::one(m, trunc), vinv = TruncSeries::one(m, trunc);
    for (int j = 1; j < data.r(i); ++j) {
      const auto& l = data.u_at(i, j);
      const Image& img = cur.at({l.gen.strand, l.gen.arc});
      v = v * (l.exp > 0 ? img.fwd : img.inv);
      vinv = (l.exp > 0 ? img.inv : img.fwd) * vinv;
      on_prefix(j, v, vinv);
    }
    return v;
  };

  for (int level = 2; level <= depth; ++level) {
    std::map<ArcKey, Image> next;
    for (int i = 1; i <= m; ++i) {
      next.insert_or_assign({i, 1}, cur.at({i, 1}));
      walk(i, [&](int j, const TruncSeries& v, const TruncSeries& vinv) {
        TruncSeries f = vinv, g = vinv;
        f.mul_letter(i, 1);
        g.mul_letter(i, -1);
        next.insert_or_assign({i, j + 1}, Image{f * v, g * v});
      });
    }
    cur = std::move(next);
  }

  std::vector<TruncSeries> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const TruncSeries v = walk(i, [](int, const TruncSeries&, const TruncSeries&) {});
    TruncSeries lambda = TruncSeries::one(m, trunc);
    const int s = data.framing(i) + framing_shift;
    for (int k = 0; k < (s < 0 ? -s : s); ++k) lambda.mul_letter(i, s < 0 ? -1 : 1);
    out.push_back(lambda * v);
  }
  return out;
}

// ------------------------------------------------------------ tables

// Shorter sequences first, then lexicographic.
struct SequenceOrder {
  bool operator()(const Sequence& a, const Sequence& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline bool is_non_repeated(const Sequence& seq) {
  Sequence s = seq;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

// All sequences over 1..m with lengths min_len..max_len, in table order.
inline std::vector<Sequence> all_sequences(int m, int max_len, bool non_repeated, int min_len = 2) {
  std::vector<Sequence> out;
  for (int len = min_len; len <= max_len; ++len) {
    Sequence s(static_cast<std::size_t>(len), 1);
    while (true) {
      if (!non_repeated || is_non_repeated(s)) out.push_back(s);
      int pos = len - 1;
      while (pos >= 0 && s[static_cast<std::size_t>(pos)] == m) s[static_cast<std::size_t>(pos--)] = 1;
      if (pos < 0) break;
      ++s[static_cast<std::size_t>(pos)];
    }
  }
  return out;
}

inline BigInt reduce_mod(const BigInt& v, int n) {
  BigInt r = v % n;
  if (r < 0) r += n;
  return r;
}

struct InvariantTable {
  int m = 1;
  int L = 2;
  bool non_repeated = false;
  std::map<Sequence, BigInt, SequenceOrder> values;

  BigInt at(const Sequence& seq) const {
    auto it = values.find(seq);
    if (it == values.end()) throw std::out_of_range("sequence not in invariant table");
    return it->second;
  }

  InvariantTable reduced(int n) const {
    InvariantTable out = *this;
    for (auto& [seq, v] : out.values) v = reduce_mod(v, n);
    return out;
  }

  std::string to_tsv() const {
    std::ostringstream os;
    os << "sequence\tvalue\n";
    for (const auto& [seq, v] : values) {
      for (std::size_t k = 0; k < seq.size(); ++k) os << (k ? "," : "") << seq[k];
      os << '\t' << v << '\n';
    }
    return os.str();
  }

  friend bool operator==(const InvariantTable&, const InvariantTable&) = default;
};

inline InvariantTable invariant_table(const GaussCode& code, int L, bool non_repeated) {
  if (L < 2) throw std::invalid_argument("invariant_table: max length must be >= 2");
  InvariantTable table;
  table.m = code.m;
  table.L = L;
  table.non_repeated = non_repeated;
  const auto seqs = all_sequences(code.m, L, non_repeated);
  if (seqs.empty()) return table;
  const auto lambdas = longitude_series(wirtinger(code), L, L - 1);
  for (const auto& seq : seqs)
    table.values.emplace(seq, lambdas[static_cast<std::size_t>(seq.back() - 1)].coefficient(
                                  Monomial(seq.begin(), seq.end() - 1)));
  return table;
}

}  // namespace wmilnor
