#pragma once

// w-trees and w-arrows on Gauss codes: expansion into w-arrows, surgery,
// the generator links W_Ii and the normal-form representatives built from
// them.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gauss_code.hpp"
#include "milnor.hpp"

namespace wmilnor {

// A point on a strand: the gap (0..length) of the underlying code, plus a
// key ordering several endpoints that share that gap.
struct Endpoint {
  int strand = 1;
  int gap = 0;
  std::vector<int> key;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct WArrow {
  Endpoint tail;
  Endpoint head;
  bool twist = false;
};

struct TreeNode {
  Endpoint tail;                   // leaves only
  std::vector<TreeNode> children;  // none for a leaf, two for a trivalent vertex
  bool twist = false;              // parity of twists on the outgoing edge

  bool is_leaf() const { return children.empty(); }

  int degree() const {
    if (is_leaf()) return 1;
    int d = 0;
    for (const auto& c : children) d += c.degree();
    return d;
  }

  static TreeNode leaf(Endpoint tail, bool twist = false) { return {std::move(tail), {}, twist}; }
  static TreeNode join(TreeNode in1, TreeNode in2, bool twist = false) {
    TreeNode n;
    n.children.push_back(std::move(in1));
    n.children.push_back(std::move(in2));
    n.twist = twist;
    return n;
  }
};

// root.twist is the twist parity of the terminal edge.
struct WTree {
  TreeNode root;
  Endpoint head;

  int degree() const { return root.degree(); }

  bool well_formed() const { return well_formed(root); }

 private:
  static bool well_formed(const TreeNode& n) {
    if (n.is_leaf()) return true;
    return n.children.size() == 2 && well_formed(n.children[0]) && well_formed(n.children[1]);
  }
};

namespace detail {

inline void tag_leaves(TreeNode& n, int tag) {
  if (n.is_leaf()) {
    n.tail.key.push_back(tag);
    return;
  }
  for (auto& c : n.children) tag_leaves(c, tag);
}

inline TreeNode parallel(const TreeNode& n, int tag, bool add_twist) {
  TreeNode out = n;
  tag_leaves(out, tag);
  out.twist = out.twist != add_twist;
  return out;
}

inline Endpoint sub_head(const Endpoint& h, int slot) {
  Endpoint out = h;
  out.key.push_back(slot);
  return out;
}

// One expansion step at the vertex feeding `head`, then recursion. A
// twist on the outgoing edge inverts the commutator, i.e. swaps inputs.
inline void expand_into(const TreeNode& n, const Endpoint& head, std::vector<WArrow>& out) {
  if (n.is_leaf()) {
    out.push_back({n.tail, head, n.twist});
    return;
  }
  const TreeNode* a = &n.children[0];
  const TreeNode* b = &n.children[1];
  if (n.twist) std::swap(a, b);
  expand_into(parallel(*a, 0, false), sub_head(head, 0), out);
  expand_into(parallel(*b, 0, false), sub_head(head, 1), out);
  expand_into(parallel(*a, 1, true), sub_head(head, 2), out);
  expand_into(parallel(*b, 1, true), sub_head(head, 3), out);
}

inline void index_leaves(TreeNode& n, int& next) {
  if (n.is_leaf()) {
    n.tail.key.push_back(next++);
    return;
  }
  for (auto& c : n.children) index_leaves(c, next);
}

}  // namespace detail

inline std::vector<WArrow> expand(const WTree& tree) {
  if (!tree.well_formed()) throw std::invalid_argument("expand: internal vertices need exactly two inputs");
  WTree t = tree;
  int next = 0;
  detail::index_leaves(t.root, next);
  t.head.key.push_back(next);
  std::vector<WArrow> out;
  detail::expand_into(t.root, t.head, out);
  return out;
}

// Each arrow adds one crossing: tail strand over, head strand under, sign
// +1 untwisted and -1 twisted. Endpoints sharing a gap are ordered by key,
// then by arrow order.
inline GaussCode surgery(const GaussCode& code, const std::vector<WArrow>& arrows) {
  struct Insert {
    int strand, gap;
    const std::vector<int>* key;
    std::size_t arrow;
    bool is_head;
    Passage passage;
  };
  std::vector<Insert> inserts;
  const int base = code.max_id();
  for (std::size_t t = 0; t < arrows.size(); ++t) {
    const auto& a = arrows[t];
    for (const Endpoint* e : {&a.tail, &a.head}) {
      if (e->strand < 1 || e->strand > code.m || e->gap < 0 || e->gap > code.length(e->strand))
        throw DiagramError("surgery: arrow endpoint outside the diagram");
    }
    const int id = base + static_cast<int>(t) + 1;
    const int sign = a.twist ? -1 : 1;
    inserts.push_back({a.tail.strand, a.tail.gap, &a.tail.key, t, false, {id, Role::over, sign}});
    inserts.push_back({a.head.strand, a.head.gap, &a.head.key, t, true, {id, Role::under, sign}});
  }
  std::stable_sort(inserts.begin(), inserts.end(), [](const Insert& x, const Insert& y) {
    return std::tie(x.strand, x.gap, *x.key, x.arrow, x.is_head) <
           std::tie(y.strand, y.gap, *y.key, y.arrow, y.is_head);
  });

  GaussCode out(code.m);
  auto it = inserts.begin();
  for (int i = 1; i <= code.m; ++i) {
    const auto& src = code.strand(i);
    auto& dst = out.strand(i);
    for (int g = 0; g <= static_cast<int>(src.size()); ++g) {
      for (; it != inserts.end() && it->strand == i && it->gap == g; ++it) dst.push_back(it->passage);
      if (g < static_cast<int>(src.size())) dst.push_back(src[static_cast<std::size_t>(g)]);
    }
  }
  return out;
}

inline GaussCode surgery(const GaussCode& code, const WTree& tree) { return surgery(code, expand(tree)); }

// ------------------------------------------------------------- generators

// S_k(i): k distinct indices in 1..m other than i, the last one largest.
inline bool in_S(int m, const Sequence& I, int i) {
  if (I.empty() || i < 1 || i > m) return false;
  for (int j : I)
    if (j < 1 || j > m || j == i) return false;
  if (!is_non_repeated(I)) return false;
  return std::all_of(I.begin(), I.end() - 1, [&](int j) { return j < I.back(); });
}

inline std::vector<Sequence> enumerate_S(int m, int k, int i) {
  std::vector<Sequence> out;
  if (k < 1 || k > m - 1) return out;
  for (auto& s : all_sequences(m, k, true, k))
    if (in_S(m, s, i)) out.push_back(std::move(s));
  return out;
}

struct GeneratorIndex {
  int k = 1;
  int i = 1;
  Sequence I;

  friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
};

// Every (I, i) with I in S_k(i), ordered by k, then i, then I.
inline std::vector<GeneratorIndex> generator_indices(int m) {
  std::vector<GeneratorIndex> out;
  for (int k = 1; k <= m - 1; ++k)
    for (int i = 1; i <= m; ++i)
      for (auto& I : enumerate_S(m, k, i)) out.push_back({k, i, std::move(I)});
  return out;
}

// The comb tree with tails on j_1..j_k (right-normed) and head on strand i,
// all endpoints on 1_m.
inline WTree generator_tree(int m, const Sequence& I, int i, bool inverse) {
  if (!in_S(m, I, i)) throw std::invalid_argument("generator: sequence is not in S_k(i)");
  TreeNode node = TreeNode::leaf({I.back(), 0, {}});
  for (auto it = I.rbegin() + 1; it != I.rend(); ++it) node = TreeNode::join(TreeNode::leaf({*it, 0, {}}), std::move(node));
  node.twist = inverse;
  return WTree{std::move(node), Endpoint{i, 0, {}}};
}

inline GaussCode generator(int m, const Sequence& I, int i, bool inverse = false) {
  return surgery(GaussCode(m), generator_tree(m, I, i, inverse));
}

// W_Ii^x as a stacked product.
inline GaussCode generator_power(int m, const Sequence& I, int i, long long x) {
  GaussCode out(m);
  if (x == 0) return out;
  const GaussCode w = generator(m, I, i, x < 0);
  for (long long t = 0; t < (x < 0 ? -x : x); ++t) out = stack(out, w);
  return out;
}

// ----------------------------------------------------------- normal forms

struct ExponentEntry {
  int k = 1;
  int i = 1;
  Sequence I;
  long long exponent = 0;

  friend bool operator==(const ExponentEntry&, const ExponentEntry&) = default;
};

using ExponentTable = std::vector<ExponentEntry>;

inline std::string exponent_tsv(const ExponentTable& table) {
  std::ostringstream os;
  os << "k\ti\tI\texponent\n";
  for (const auto& e : table) {
    os << e.k << '\t' << e.i << '\t';
    for (std::size_t t = 0; t < e.I.size(); ++t) os << (t ? "," : "") << e.I[t];
    os << '\t' << e.exponent << '\n';
  }
  return os.str();
}

struct NormalForm {
  GaussCode code;
  ExponentTable exponents;  // x (sv) or y (mod-n relations)
  ExponentTable z;          // 2n-sv only: k = 1 generators W_ij with i < j
};

namespace detail {

inline long long to_exponent(const BigInt& v) {
  if (v > 1000000 || v < -1000000) throw std::overflow_error("normal form exponent too large to realize");
  return static_cast<long long>(v);
}

inline long long mod_floor(long long v, int n) {
  long long r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

// sigma_1 * ... * sigma_{m-1}, peeling one degree at a time.
inline NormalForm normal_form_sv(const GaussCode& code) {
  require_valid(code);
  const int m = code.m;
  NormalForm nf{GaussCode(m), {}, {}};
  if (m < 2) return nf;
  const InvariantTable target = invariant_table(code, m, true);
  for (int k = 1; k <= m - 1; ++k) {
    const InvariantTable partial = invariant_table(nf.code, k + 1, true);
    GaussCode sigma_k(m);
    for (int i = 1; i <= m; ++i)
      for (const auto& I : enumerate_S(m, k, i)) {
        Sequence seq = I;
        seq.push_back(i);
        const long long x = detail::to_exponent(target.at(seq) - partial.at(seq));
        nf.exponents.push_back({k, i, I, x});
        sigma_k = stack(sigma_k, generator_power(m, I, i, x));
      }
    nf.code = stack(nf.code, sigma_k);
  }
  return nf;
}

inline NormalForm normal_form_2n_sv(const GaussCode& code, int n) {
  if (n < 1) throw std::invalid_argument("normal_form_2n_sv: n must be >= 1");
  const NormalForm sv = normal_form_sv(code);
  const int m = code.m;
  NormalForm nf{GaussCode(m), {}, {}};
  auto x_of = [&](int k, int i, const Sequence& I) {
    for (const auto& e : sv.exponents)
      if (e.k == k && e.i == i && e.I == I) return e.exponent;
    throw std::logic_error("missing exponent");
  };

  // tau_1 = prod_{i<j} W_ji^{y_j} * W_ij^{z_i}
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      const long long xj = x_of(1, i, {j}), xi = x_of(1, j, {i});
      const long long y = detail::mod_floor(xj, n);
      const long long z = xi + (y - xj);
      nf.exponents.push_back({1, i, {j}, y});
      nf.z.push_back({1, j, {i}, z});
      nf.code = stack(nf.code, stack(generator_power(m, {j}, i, y), generator_power(m, {i}, j, z)));
    }
  for (const auto& e : sv.exponents) {
    if (e.k < 2) continue;
    const long long y = detail::mod_floor(e.exponent, n);
    nf.exponents.push_back({e.k, e.i, e.I, y});
    nf.code = stack(nf.code, generator_power(m, e.I, e.i, y));
  }
  return nf;
}

inline NormalForm normal_form_Vn_sv(const GaussCode& code, int n) {
  if (n < 1) throw std::invalid_argument("normal_form_Vn_sv: n must be >= 1");
  const NormalForm sv = normal_form_sv(code);
  NormalForm nf{GaussCode(code.m), {}, {}};
  for (const auto& e : sv.exponents) {
    const long long y = detail::mod_floor(e.exponent, n);
    nf.exponents.push_back({e.k, e.i, e.I, y});
    nf.code = stack(nf.code, generator_power(code.m, e.I, e.i, y));
  }
  return nf;
}

}  // namespace wmilnor
