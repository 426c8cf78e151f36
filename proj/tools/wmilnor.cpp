// wmilnor: command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 suite failure.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <wmilnor/wmilnor.hpp>

using namespace wmilnor;

namespace {

constexpr int kUsage = 1;
constexpr int kInput = 2;
constexpr int kSuiteFailure = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

MoveSite parse_site(const std::string& text) {
  // "a:pa,b:pb"
  MoveSite site;
  char c1 = 0, c2 = 0, c3 = 0;
  std::istringstream in(text);
  if (!(in >> site.strand_a >> c1 >> site.pos_a >> c2 >> site.strand_b >> c3 >> site.pos_b) || c1 != ':' ||
      c2 != ',' || c3 != ':')
    throw UsageError("--site expects a:pos,b:pos, got '" + text + "'");
  return site;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int need_n(const std::optional<int>& n, const std::string& relation) {
  if (!n) throw UsageError("relation " + relation + " requires --n");
  if (*n < 1) throw UsageError("--n must be >= 1");
  return *n;
}

ExponentTable merged(const NormalForm& nf) {
  ExponentTable all = nf.exponents;
  all.insert(all.end(), nf.z.begin(), nf.z.end());
  std::stable_sort(all.begin(), all.end(), [](const ExponentEntry& a, const ExponentEntry& b) {
    return std::tie(a.k, a.i, a.I) < std::tie(b.k, b.i, b.I);
  });
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Welded Milnor invariants, local moves and normal forms of welded string links"};
  app.require_subcommand(1);

  // invariants
  auto* inv = app.add_subcommand("invariants", "Print the welded Milnor invariant table as TSV");
  std::string inv_file;
  int max_len = 2;
  bool non_repeated = false;
  std::optional<int> inv_mod;
  inv->add_option("file", inv_file, "Diagram file")->required();
  inv->add_option("-L,--max-len", max_len, "Longest sequence length")->check(CLI::Range(2, 12));
  inv->add_flag("--non-repeated", non_repeated, "Only sequences with distinct entries");
  inv->add_option("--mod", inv_mod, "Reduce values into [0,n)")->check(CLI::PositiveNumber);

  // normal-form
  auto* nf_cmd = app.add_subcommand("normal-form", "Representative of the class of a diagram");
  std::string nf_file, relation = "sv", diagram_out, exponents_out;
  std::optional<int> nf_n;
  nf_cmd->add_option("file", nf_file, "Diagram file")->required();
  nf_cmd->add_option("--relation", relation, "sv | 2n-sv | vn-sv")
      ->check(CLI::IsMember({"sv", "2n-sv", "vn-sv"}));
  nf_cmd->add_option("--n", nf_n, "Modulus for 2n-sv and vn-sv");
  nf_cmd->add_option("--diagram-out", diagram_out, "Write the representative here instead of stdout");
  nf_cmd->add_option("--exponents-out", exponents_out, "Write the exponent table here instead of stdout");

  // apply-move
  auto* mv = app.add_subcommand("apply-move", "Rewrite a diagram by one move and print the result");
  std::string mv_file, move, site_text;
  int mv_n = 1, sign = 1, crossing = 0, strand = 1, pos = 0, steps = 10;
  std::uint64_t mv_seed = 0;
  std::vector<int> ids;
  bool over_first = true;
  mv->add_option("file", mv_file, "Diagram file")->required();
  mv->add_option("--move", move, "Move to apply")
      ->required()
      ->check(CLI::IsMember({"2n", "2n-delete", "vn-classicalize", "vn-virtualize", "virtualize", "r1-insert",
                             "r1-delete", "r2-insert", "r2-delete", "r3", "oc", "scramble"}));
  mv->add_option("--site", site_text, "Two-strand site a:pos,b:pos");
  mv->add_option("--n", mv_n, "n for 2n and V^n moves")->check(CLI::PositiveNumber);
  mv->add_option("--sign", sign, "Crossing sign")->check(CLI::IsMember({-1, 1}));
  mv->add_option("--id", crossing, "Crossing id");
  mv->add_option("--ids", ids, "Crossing ids (r2-delete: two, r3: a,b,c)")->delimiter(',');
  mv->add_option("--strand", strand, "Strand for r1-insert and oc");
  mv->add_option("--pos", pos, "Position for r1-insert and oc");
  mv->add_option("--over-first", over_first, "r1-insert: over passage first");
  mv->add_option("--steps", steps, "scramble: number of rewrites")->check(CLI::NonNegativeNumber);
  mv->add_option("--seed", mv_seed, "scramble: seed");

  // equiv
  auto* eq = app.add_subcommand("equiv", "Decide an equivalence between two diagrams");
  std::string eq_a, eq_b, eq_relation = "sv";
  std::optional<int> eq_n;
  eq->add_option("a", eq_a, "First diagram")->required();
  eq->add_option("b", eq_b, "Second diagram")->required();
  eq->add_option("--relation", eq_relation, "sv | 2n-sv | vn-sv")->check(CLI::IsMember({"sv", "2n-sv", "vn-sv"}));
  eq->add_option("--n", eq_n, "Modulus");

  // verify
  auto* ver = app.add_subcommand("verify", "Run a randomized property suite");
  std::string suite;
  std::uint64_t ver_seed = 1;
  int trials = 50;
  ver->add_option("--suite", suite, "isotopy | 2n | vn | prime-p | counting | normal-form")->required();
  ver->add_option("--seed", ver_seed, "Seed");
  ver->add_option("--trials", trials, "Number of trials")->check(CLI::NonNegativeNumber);

  // count
  auto* cnt = app.add_subcommand("count", "Counting formulas and mod-n representatives");
  int cnt_m = 2;
  std::optional<int> cnt_n;
  bool enumerate = false;
  std::uint64_t budget = default_enumeration_budget;
  cnt->add_option("--m", cnt_m, "Strand count")->required()->check(CLI::PositiveNumber);
  cnt->add_option("--n", cnt_n, "Modulus")->check(CLI::PositiveNumber);
  cnt->add_flag("--enumerate", enumerate, "Print the fingerprint report of all representatives");
  cnt->add_option("--budget", budget, "Enumeration budget");

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a diagram: trivial, generator W_Ii^x, or random");
  int gen_m = 2, gen_i = 1, crossings = 6;
  std::vector<int> gen_I;
  long long power_x = 1;
  bool inverse = false, random = false;
  std::uint64_t gen_seed = 1;
  gen->add_option("--m", gen_m, "Strand count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--I", gen_I, "Tail sequence, comma separated")->delimiter(',');
  gen->add_option("--i", gen_i, "Head strand");
  gen->add_flag("--inverse", inverse, "Twisted terminal edge (W_Ii^-1)");
  gen->add_option("--power", power_x, "Exponent x of W_Ii^x");
  gen->add_flag("--random", random, "Random diagram");
  gen->add_option("--crossings", crossings, "Crossings of a random diagram")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_seed, "Seed of a random diagram");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (inv->parsed()) {
      const GaussCode code = read_diagram_file(inv_file);
      InvariantTable table = invariant_table(code, max_len, non_repeated);
      if (inv_mod) table = table.reduced(*inv_mod);
      std::cout << table.to_tsv();
    } else if (nf_cmd->parsed()) {
      const GaussCode code = read_diagram_file(nf_file);
      NormalForm nf;
      if (relation == "sv")
        nf = normal_form_sv(code);
      else if (relation == "2n-sv")
        nf = normal_form_2n_sv(code, need_n(nf_n, relation));
      else
        nf = normal_form_Vn_sv(code, need_n(nf_n, relation));
      write_text(diagram_out, write_diagram(canonical_relabel(nf.code)));
      write_text(exponents_out, exponent_tsv(merged(nf)));
    } else if (mv->parsed()) {
      const GaussCode code = read_diagram_file(mv_file);
      auto site = [&] {
        if (site_text.empty()) throw UsageError("--move " + move + " requires --site");
        return parse_site(site_text);
      };
      auto need_ids = [&](std::size_t n) {
        if (ids.size() != n) throw UsageError("--move " + move + " requires --ids with " + std::to_string(n) + " ids");
      };
      GaussCode out;
      if (move == "2n")
        out = insert_2n(code, site(), mv_n, sign);
      else if (move == "2n-delete")
        out = delete_2n(code, site(), mv_n);
      else if (move == "vn-classicalize")
        out = apply_Vn(code, mv_n, VnDirection::classicalize, site(), sign);
      else if (move == "vn-virtualize")
        out = apply_Vn(code, mv_n, VnDirection::virtualize, site());
      else if (move == "virtualize")
        out = virtualize_crossing(code, crossing);
      else if (move == "r1-insert")
        out = reidemeister(code, R1Insert{strand, pos, sign, over_first});
      else if (move == "r1-delete")
        out = reidemeister(code, R1Delete{crossing});
      else if (move == "r2-insert")
        out = reidemeister(code, R2Insert{site(), sign, false});
      else if (move == "r2-delete") {
        need_ids(2);
        out = reidemeister(code, R2Delete{ids[0], ids[1]});
      } else if (move == "r3") {
        need_ids(3);
        out = reidemeister(code, R3Move{ids[0], ids[1], ids[2]});
      } else if (move == "oc")
        out = reidemeister(code, OCSwap{strand, pos});
      else
        out = scramble(code, steps, mv_seed);
      std::cout << write_diagram(out);
    } else if (eq->parsed()) {
      const GaussCode a = read_diagram_file(eq_a), b = read_diagram_file(eq_b);
      if (a.m != b.m) throw DiagramError("diagrams have different strand counts");
      bool result;
      if (eq_relation == "sv")
        result = equivalent_sv(a, b);
      else if (eq_relation == "2n-sv")
        result = equivalent_2n_sv(a, b, need_n(eq_n, eq_relation));
      else
        result = equivalent_Vn_sv(a, b, need_n(eq_n, eq_relation));
      std::cout << (result ? "equivalent" : "not-equivalent") << '\n';
    } else if (ver->parsed()) {
      SuiteReport report;
      try {
        report = run_suite(suite, ver_seed, trials);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      std::cout << report.text();
      return report.passed() ? 0 : kSuiteFailure;
    } else if (cnt->parsed()) {
      if (enumerate) {
        if (!cnt_n) throw UsageError("--enumerate requires --n");
        const auto fr = fingerprint_report(cnt_m, *cnt_n, budget);
        std::cout << fr.tsv;
      } else {
        std::cout << "m=" << cnt_m << " s_m=" << count_sm(cnt_m) << " w_m=" << count_wm(cnt_m);
        if (cnt_n) std::cout << " n=" << *cnt_n << " order=" << order_Vn_group(cnt_m, *cnt_n);
        std::cout << '\n';
      }
    } else if (gen->parsed()) {
      GaussCode out(gen_m);
      if (random) {
        std::mt19937_64 rng(gen_seed);
        out = random_code(rng, gen_m, crossings);
      } else if (!gen_I.empty()) {
        if (!in_S(gen_m, gen_I, gen_i)) throw UsageError("--I is not in S_k(i) for the given --i and --m");
        out = inverse ? generator(gen_m, gen_I, gen_i, true) : generator_power(gen_m, gen_I, gen_i, power_x);
      }
      std::cout << write_diagram(canonical_relabel(out));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}
