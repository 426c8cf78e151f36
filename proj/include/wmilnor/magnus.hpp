#pragma once

// Truncated power series in noncommuting variables X_1..X_m with exact
// integer coefficients, and the Magnus expansion of meridian words.

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "free_group.hpp"

namespace wmilnor {

using BigInt = boost::multiprecision::cpp_int;

// Sequence of variable indices; the empty monomial is the constant term.
using Monomial = std::vector<int>;

class TruncSeries {
 public:
  TruncSeries(int m, int q) : m_(m), q_(q), terms_(static_cast<std::size_t>(q + 1)) {
    if (m < 1 || q < 0) throw std::invalid_argument("TruncSeries: need m >= 1 and q >= 0");
  }

  static TruncSeries one(int m, int q) {
    TruncSeries s(m, q);
    s.add({}, 1);
    return s;
  }

  // E(alpha_i^exp) for exp = +1 or -1.
  static TruncSeries letter(int m, int q, int i, int exp) {
    TruncSeries s(m, q);
    s.check_index(i);
    Monomial mono;
    for (int d = 0; d <= q; ++d) {
      if (exp > 0 && d > 1) break;
      s.add(mono, (exp < 0 && d % 2 == 1) ? -1 : 1);
      mono.push_back(i);
    }
    return s;
  }

  int vars() const { return m_; }
  int truncation() const { return q_; }

  // Terms of exact degree d, keyed by monomial.
  const std::map<Monomial, BigInt>& terms(int d) const { return terms_.at(static_cast<std::size_t>(d)); }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& t : terms_) n += t.size();
    return n;
  }

  BigInt coefficient(const Monomial& mono) const {
    if (static_cast<int>(mono.size()) > q_)
      throw std::out_of_range("monomial of degree " + std::to_string(mono.size()) +
                              " exceeds truncation " + std::to_string(q_));
    const auto& t = terms_[mono.size()];
    auto it = t.find(mono);
    return it == t.end() ? BigInt(0) : it->second;
  }

  // Adds c to the coefficient of mono; terms past the truncation are dropped.
  void add(const Monomial& mono, const BigInt& c) {
    if (static_cast<int>(mono.size()) > q_ || c == 0) return;
    for (int v : mono) check_index(v);
    auto& t = terms_[mono.size()];
    auto [it, fresh] = t.try_emplace(mono, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    TruncSeries out(a.m_, a.q_);
    for (int da = 0; da <= a.q_; ++da)
      for (const auto& [ma, ca] : a.terms_[da])
        for (int db = 0; da + db <= a.q_; ++db)
          for (const auto& [mb, cb] : b.terms_[db]) {
            Monomial mono;
            mono.reserve(ma.size() + mb.size());
            mono.insert(mono.end(), ma.begin(), ma.end());
            mono.insert(mono.end(), mb.begin(), mb.end());
            out.add_unchecked(std::move(mono), ca * cb);
          }
    return out;
  }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    TruncSeries out = a;
    for (const auto& t : b.terms_)
      for (const auto& [mono, c] : t) out.add_unchecked(mono, c);
    return out;
  }

  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    TruncSeries out = a;
    for (const auto& t : b.terms_)
      for (const auto& [mono, c] : t) out.add_unchecked(mono, -c);
    return out;
  }

  // this * E(alpha_i^exp), without building the letter series.
  void mul_letter(int i, int exp) {
    check_index(i);
    if (exp > 0) {
      // S (1 + X_i) = S + S X_i, highest degree first so new terms are not reused
      for (int d = q_ - 1; d >= 0; --d)
        for (const auto& [mono, c] : terms_[d]) {
          Monomial next = mono;
          next.push_back(i);
          add_unchecked(std::move(next), c);
        }
    } else {
      // T (1 + X_i) = S  =>  T_d = S_d - T_{d-1} X_i, lowest degree first
      for (int d = 1; d <= q_; ++d)
        for (const auto& [mono, c] : terms_[d - 1]) {
          Monomial next = mono;
          next.push_back(i);
          add_unchecked(std::move(next), -c);
        }
    }
  }

 private:
  void check_index(int i) const {
    if (i < 1 || i > m_)
      throw std::out_of_range("variable index " + std::to_string(i) + " outside 1.." + std::to_string(m_));
  }
  void check_compatible(const TruncSeries& o) const {
    if (m_ != o.m_ || q_ != o.q_) throw std::invalid_argument("TruncSeries: dimension or truncation mismatch");
  }
  void add_unchecked(Monomial mono, const BigInt& c) {
    if (c == 0) return;
    auto& t = terms_[mono.size()];
    auto [it, fresh] = t.try_emplace(std::move(mono), c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  int m_;
  int q_;
  std::vector<std::map<Monomial, BigInt>> terms_;
};

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) { return a * b; }

inline BigInt coefficient(const TruncSeries& s, const Monomial& mono) { return s.coefficient(mono); }

// Magnus expansion alpha_i -> 1 + X_i of a word over meridians.
inline TruncSeries magnus_expand(const Word& w, int m, int q) {
  TruncSeries s = TruncSeries::one(m, q);
  for (const auto& l : w.letters()) {
    if (l.gen.kind != Gen::Kind::meridian)
      throw std::invalid_argument("magnus_expand: word contains a non-meridian generator");
    s.mul_letter(l.gen.strand, l.exp);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
  bool first = true;
  for (int d = 0; d <= s.truncation(); ++d)
    for (const auto& [mono, c] : s.terms(d)) {
      os << (first ? "" : " + ") << c;
      for (int v : mono) os << "*X" << v;
      first = false;
    }
  if (first) os << '0';
  return os << " + O(" << s.truncation() + 1 << ')';
}

}  // namespace wmilnor
