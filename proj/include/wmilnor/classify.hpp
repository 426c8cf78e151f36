#pragma once

// Equivalence predicates for sv, (2n+sv) and (V^n+sv), the counting
// formulas, and enumeration of the mod-n representatives.

#include <cstdint>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gauss_code.hpp"
#include "milnor.hpp"
#include "wtree.hpp"

namespace wmilnor {

namespace detail {

inline void check_same_m(const GaussCode& a, const GaussCode& b) {
  if (a.m != b.m) throw DiagramError("strand counts differ");
}

// Non-repeated table of full length; empty when m == 1.
inline InvariantTable full_table(const GaussCode& code) {
  if (code.m < 2) return InvariantTable{code.m, 2, true, {}};
  return invariant_table(code, code.m, true);
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int t = 2; t <= n; ++t) f *= t;
  return f;
}

inline BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int t = 1; t <= k; ++t) b = b * (n - k + t) / t;
  return b;
}

}  // namespace detail

inline bool equivalent_sv(const GaussCode& a, const GaussCode& b) {
  detail::check_same_m(a, b);
  return detail::full_table(a) == detail::full_table(b);
}

inline bool equivalent_Vn_sv(const GaussCode& a, const GaussCode& b, int n) {
  detail::check_same_m(a, b);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return detail::full_table(a).reduced(n) == detail::full_table(b).reduced(n);
}

inline bool equivalent_2n_sv(const GaussCode& a, const GaussCode& b, int n) {
  detail::check_same_m(a, b);
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const auto ta = detail::full_table(a), tb = detail::full_table(b);
  if (ta.reduced(n) != tb.reduced(n)) return false;
  for (int i = 1; i <= a.m; ++i)
    for (int j = i + 1; j <= a.m; ++j)
      if (ta.at({i, j}) - ta.at({j, i}) != tb.at({i, j}) - tb.at({j, i})) return false;
  return true;
}

// Rank of the link-homotopy group of classical string links.
inline BigInt count_sm(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  BigInt s = 0;
  for (int r = 2; r <= m; ++r) s += detail::factorial(r - 2) * detail::binomial(m, r);
  return s;
}

// Rank of the sv-classes of welded string links.
inline BigInt count_wm(int m) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  BigInt w = 0;
  for (int r = 2; r <= m; ++r) w += detail::factorial(r - 2) * r * detail::binomial(m, r);
  return w;
}

inline BigInt order_Vn_group(int m, int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const BigInt w = count_wm(m);
  BigInt order = 1;
  for (BigInt t = 0; t < w; ++t) order *= n;
  return order;
}

struct Representative {
  GaussCode code;
  ExponentTable y;
};

constexpr std::uint64_t default_enumeration_budget = 10000;

// All products of W_Ii^{y_I} with 0 <= y_I < n, exponent vectors in
// lexicographic order over the canonical generator list.
inline std::vector<Representative> enumerate_representatives(int m, int n,
                                                             std::uint64_t budget = default_enumeration_budget) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const BigInt total = order_Vn_group(m, n);
  if (total > budget)
    throw std::length_error("enumeration of " + total.str() + " representatives exceeds budget " +
                            std::to_string(budget));
  const auto gens = generator_indices(m);
  // powers[g][y] = W_g^y
  std::vector<std::vector<GaussCode>> powers;
  for (const auto& g : gens) {
    std::vector<GaussCode> row;
    for (int y = 0; y < n; ++y) row.push_back(generator_power(m, g.I, g.i, y));
    powers.push_back(std::move(row));
  }

  std::vector<Representative> out;
  std::vector<int> digits(gens.size(), 0);
  while (true) {
    Representative rep{GaussCode(m), {}};
    for (std::size_t g = 0; g < gens.size(); ++g) {
      rep.y.push_back({gens[g].k, gens[g].i, gens[g].I, digits[g]});
      rep.code = stack(rep.code, powers[g][static_cast<std::size_t>(digits[g])]);
    }
    out.push_back(std::move(rep));
    std::size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] == n - 1) digits[--pos] = 0;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

// Non-repeated invariants reduced mod n.
inline InvariantTable fingerprint(const GaussCode& code, int n) { return detail::full_table(code).reduced(n); }

// FNV-1a over the fingerprint TSV, as 16 hex digits.
inline std::string fingerprint_hash(const InvariantTable& fp) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : fp.to_tsv()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

struct FingerprintReport {
  std::string tsv;
  std::size_t classes = 0;
  BigInt expected = 0;

  bool complete() const { return BigInt(classes) == expected; }
};

inline FingerprintReport fingerprint_report(int m, int n, std::uint64_t budget = default_enumeration_budget) {
  FingerprintReport report;
  report.expected = order_Vn_group(m, n);
  std::ostringstream os;
  os << "y_table\tfingerprint_hash\n";
  std::set<InvariantTable, bool (*)(const InvariantTable&, const InvariantTable&)> seen(
      [](const InvariantTable& a, const InvariantTable& b) { return a.values < b.values; });
  for (const auto& rep : enumerate_representatives(m, n, budget)) {
    const auto fp = fingerprint(rep.code, n);
    for (std::size_t t = 0; t < rep.y.size(); ++t) os << (t ? "," : "") << rep.y[t].exponent;
    os << '\t' << fingerprint_hash(fp) << '\n';
    seen.insert(fp);
  }
  report.classes = seen.size();
  os << "classes=" << report.classes << " expected=" << report.expected << '\n';
  report.tsv = os.str();
  return report;
}

}  // namespace wmilnor
