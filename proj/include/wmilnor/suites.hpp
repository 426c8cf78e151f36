#pragma once

// Randomized property suites behind `wmilnor verify`.

#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "classify.hpp"
#include "gauss_code.hpp"
#include "milnor.hpp"
#include "moves.hpp"
#include "wtree.hpp"

namespace wmilnor {

struct TrialResult {
  std::string line;
  bool pass = true;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<TrialResult> trials;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& t : trials) f += t.pass ? 0 : 1;
    return f;
  }
  bool passed() const { return failures() == 0; }

  std::string text() const {
    std::ostringstream os;
    for (const auto& t : trials) os << t.line << '\n';
    os << "suite=" << suite << " seed=" << seed << " trials=" << trials.size() << " failures=" << failures()
       << (passed() ? " PASS" : " FAIL") << '\n';
    return os.str();
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"isotopy", "2n", "vn", "prime-p", "counting", "normal-form"};
  return names;
}

template <class Rng>
MoveSite random_site(Rng& rng, const GaussCode& code, bool distinct_strands) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  MoveSite site;
  site.strand_a = pick(1, code.m);
  do {
    site.strand_b = pick(1, code.m);
  } while (distinct_strands && code.m > 1 && site.strand_b == site.strand_a);
  site.pos_a = pick(0, code.length(site.strand_a));
  site.pos_b = pick(0, code.length(site.strand_b));
  return site;
}

namespace detail {

inline std::string describe(const MoveSite& s) {
  std::ostringstream os;
  os << "site=" << s.strand_a << ':' << s.pos_a << ',' << s.strand_b << ':' << s.pos_b;
  return os.str();
}

inline std::string first_difference(const InvariantTable& a, const InvariantTable& b) {
  for (const auto& [seq, v] : a.values) {
    auto it = b.values.find(seq);
    if (it == b.values.end() || it->second != v) {
      std::ostringstream os;
      os << "mu(";
      for (std::size_t k = 0; k < seq.size(); ++k) os << (k ? "," : "") << seq[k];
      os << ") " << v << " vs " << (it == b.values.end() ? BigInt(0) : it->second);
      return os.str();
    }
  }
  return "tables differ";
}

inline TrialResult finish(std::ostringstream& params, bool pass, const std::string& why) {
  params << (pass ? " PASS" : " FAIL: " + why);
  return {params.str(), pass};
}

inline TrialResult isotopy_trial(std::mt19937_64& rng, int t, std::uint64_t trial_seed) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int m = pick(2, 4), c = pick(0, 12);
  const GaussCode code = random_code(rng, m, c);
  const GaussCode moved = scramble(code, 30, trial_seed);
  const auto before = invariant_table(code, 4, false), after = invariant_table(moved, 4, false);
  std::ostringstream os;
  os << "isotopy trial=" << t << " m=" << m << " crossings=" << c << " rewrites=30 final_crossings="
     << moved.crossing_count();
  return finish(os, before == after, first_difference(before, after));
}

inline TrialResult twon_trial(std::mt19937_64& rng, int t) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = t % 2 == 0 ? 2 : 3, m = pick(2, 4), c = pick(0, 10), eps = pick(0, 1) ? 1 : -1;
  const GaussCode code = random_code(rng, m, c);
  const MoveSite site = random_site(rng, code, true);
  const GaussCode moved = insert_2n(code, site, n, eps);
  const auto before = invariant_table(code, m, true), after = invariant_table(moved, m, true);
  std::ostringstream os;
  os << "2n trial=" << t << " m=" << m << " n=" << n << " eps=" << eps << ' ' << describe(site);
  if (before.reduced(n) != after.reduced(n)) return finish(os, false, "mod-n " + first_difference(before.reduced(n), after.reduced(n)));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      if (i == j) continue;
      const bool involved = (i == site.strand_a && j == site.strand_b) || (i == site.strand_b && j == site.strand_a);
      const BigInt change = after.at({i, j}) - before.at({i, j});
      if (change != (involved ? eps * n : 0))
        return finish(os, false, "mu(" + std::to_string(i) + "," + std::to_string(j) + ") changed by " + change.str());
    }
  return finish(os, true, "");
}

inline TrialResult vn_trial(std::mt19937_64& rng, int t, bool prime_suite) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int n = t % 2 == 0 ? 2 : 3, m = pick(2, 4), c = pick(0, 10), sign = pick(0, 1) ? 1 : -1;
  const GaussCode code = random_code(rng, m, c);
  const MoveSite site = random_site(rng, code, false);
  const GaussCode moved = apply_Vn(code, n, VnDirection::classicalize, site, sign);
  std::ostringstream os;
  os << (prime_suite ? "prime-p" : "vn") << " trial=" << t << " m=" << m << (prime_suite ? " p=" : " n=") << n
     << " sign=" << sign << ' ' << describe(site);
  // prime suite: every sequence of length <= p; otherwise non-repeated ones
  const auto before = prime_suite ? invariant_table(code, n, false) : invariant_table(code, m, true);
  const auto after = prime_suite ? invariant_table(moved, n, false) : invariant_table(moved, m, true);
  return finish(os, before.reduced(n) == after.reduced(n), first_difference(before.reduced(n), after.reduced(n)));
}

inline TrialResult normal_form_trial(std::mt19937_64& rng, int t) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int c = pick(0, 10);
  const GaussCode code = random_code(rng, 3, c);
  const NormalForm nf = normal_form_sv(code);
  const auto before = invariant_table(code, 3, true), after = invariant_table(nf.code, 3, true);
  std::ostringstream os;
  os << "normal-form trial=" << t << " m=3 crossings=" << c << " normal_form_crossings=" << nf.code.crossing_count();
  return finish(os, before == after, first_difference(before, after));
}

}  // namespace detail

inline SuiteReport run_suite(const std::string& name, std::uint64_t seed, int trials) {
  bool known = false;
  for (const auto& s : suite_names()) known = known || s == name;
  if (!known) throw std::invalid_argument("unknown suite '" + name + "'");
  SuiteReport report{name, seed, {}};

  if (name == "counting") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
      const auto fr = fingerprint_report(m, n);
      std::ostringstream os;
      os << "m=" << m << " n=" << n << " classes=" << fr.classes << " expected=" << fr.expected
         << (fr.complete() ? " PASS" : " FAIL");
      report.trials.push_back({os.str(), fr.complete()});
    }
    return report;
  }

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed * 1000003ULL + static_cast<std::uint64_t>(t);
    std::mt19937_64 rng(trial_seed);
    if (name == "isotopy")
      report.trials.push_back(detail::isotopy_trial(rng, t, trial_seed));
    else if (name == "2n")
      report.trials.push_back(detail::twon_trial(rng, t));
    else if (name == "vn")
      report.trials.push_back(detail::vn_trial(rng, t, false));
    else if (name == "prime-p")
      report.trials.push_back(detail::vn_trial(rng, t, true));
    else
      report.trials.push_back(detail::normal_form_trial(rng, t));
  }
  return report;
}

}  // namespace wmilnor
