#pragma once

// Freely reduced words over indexed generators: Wirtinger arc generators
// a_{ij} and meridians alpha_i. Letters carry exponent +1 or -1.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wmilnor {

struct Gen {
  enum class Kind : std::uint8_t { wirtinger, meridian };
  Kind kind = Kind::meridian;
  int strand = 1;
  int arc = 1;  // meaningful for wirtinger generators only

  static Gen wirtinger(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("wirtinger generator indices must be >= 1");
    return {Kind::wirtinger, i, j};
  }
  static Gen meridian(int i) {
    if (i < 1) throw std::invalid_argument("meridian index must be >= 1");
    return {Kind::meridian, i, 1};
  }

  friend auto operator<=>(const Gen&, const Gen&) = default;
};

struct Letter {
  Gen gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    for (const auto& l : letters) push(l);
  }
  explicit Word(const std::vector<Letter>& letters) {
    for (const auto& l : letters) push(l);
  }
  static Word of(Gen g, int exp = 1) { return Word{Letter{g, exp}}; }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  // Appends a letter, cancelling against the tail.
  void push(const Letter& l) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  Word& operator*=(const Word& rhs) {
    for (const auto& l : rhs.letters_) push(l);
    return *this;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

inline Word multiply(const Word& u, const Word& v) {
  Word out = u;
  out *= v;
  return out;
}

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

inline Word invert(const Word& w) {
  Word out;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out.push(it->inverse());
  return out;
}

// by^{-1} x by
inline Word conjugate(const Word& x, const Word& by) { return invert(by) * x * by; }

inline Word power(const Word& w, int n) {
  const Word base = n < 0 ? invert(w) : w;
  Word out;
  for (int k = 0; k < (n < 0 ? -n : n); ++k) out *= base;
  return out;
}

inline bool is_reduced(const Word& w) {
  const auto& ls = w.letters();
  for (std::size_t k = 1; k < ls.size(); ++k)
    if (ls[k].gen == ls[k - 1].gen && ls[k].exp == -ls[k - 1].exp) return false;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const Gen& g) {
  if (g.kind == Gen::Kind::meridian) return os << "alpha" << g.strand;
  return os << 'a' << g.strand << '_' << g.arc;
}

inline std::ostream& operator<<(std::ostream& os, const Word& w) {
  if (w.empty()) return os << '1';
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << l.gen;
    if (l.exp < 0) os << "^-1";
  }
  return os;
}

}  // namespace wmilnor
