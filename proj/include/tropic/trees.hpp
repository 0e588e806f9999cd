#pragma once

// Trees with labelled leaves, stored by their splits.

#include "tropic/errors.hpp"
#include "tropic/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tropic {

/// A bipartition of the leaves, stored as the side without leaf 0.
using Split = std::uint32_t;

enum class TreeShape { caterpillar, snowflake, non_trivalent };

inline std::string to_string(TreeShape s) {
  switch (s) {
    case TreeShape::caterpillar: return "caterpillar";
    case TreeShape::snowflake: return "snowflake";
    case TreeShape::non_trivalent: return "non_trivalent";
  }
  return "?";
}

inline Split normalize_split(Split s, int leaves) {
  const Split all = (Split{1} << leaves) - 1;
  s &= all;
  return (s & 1u) ? (all & ~s) : s;
}

inline bool splits_compatible(Split a, Split b, int leaves) {
  const Split all = (Split{1} << leaves) - 1;
  const Split na = all & ~a, nb = all & ~b;
  return (a & b) == 0 || (a & nb) == 0 || (na & b) == 0 || (na & nb) == 0;
}

class LabeledTree {
public:
  /// Nodes 0..leaves-1 are the leaves; internal nodes follow.
  struct Graph {
    std::vector<std::vector<int>> adj;
  };

  LabeledTree() = default;

  /// Throws PreconditionError on trivial or pairwise incompatible splits.
  LabeledTree(int leaves, std::vector<Split> splits, std::vector<std::string> labels = {})
      : leaves_(leaves), labels_(std::move(labels)) {
    if (leaves < 3 || leaves > 31) throw PreconditionError("LabeledTree: leaf count out of range");
    if (labels_.empty())
      for (int i = 0; i < leaves; ++i) labels_.push_back(std::to_string(i));
    if (static_cast<int>(labels_.size()) != leaves) throw PreconditionError("LabeledTree: label count mismatch");
    for (Split& s : splits) {
      s = normalize_split(s, leaves);
      const int size = __builtin_popcount(s);
      if (size < 2 || size > leaves - 2) throw PreconditionError("LabeledTree: trivial split");
    }
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end()), splits.end());
    for (std::size_t a = 0; a < splits.size(); ++a)
      for (std::size_t b = a + 1; b < splits.size(); ++b)
        if (!splits_compatible(splits[a], splits[b], leaves))
          throw PreconditionError("LabeledTree: incompatible splits");
    splits_ = std::move(splits);
    build_graph();
  }

  [[nodiscard]] int leaves() const { return leaves_; }
  [[nodiscard]] const std::vector<Split>& splits() const { return splits_; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }
  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] int internal_count() const { return static_cast<int>(graph_.adj.size()) - leaves_; }

  [[nodiscard]] std::vector<int> internal_degrees() const {
    std::vector<int> deg;
    for (std::size_t v = leaves_; v < graph_.adj.size(); ++v) deg.push_back(static_cast<int>(graph_.adj[v].size()));
    return deg;
  }

  [[nodiscard]] bool trivalent() const {
    const auto deg = internal_degrees();
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
  }

  /// Caterpillar when every internal vertex touches a leaf.
  [[nodiscard]] TreeShape shape() const {
    if (!trivalent()) return TreeShape::non_trivalent;
    for (std::size_t v = leaves_; v < graph_.adj.size(); ++v) {
      const auto& nb = graph_.adj[v];
      if (std::none_of(nb.begin(), nb.end(), [&](int u) { return u < leaves_; })) return TreeShape::snowflake;
    }
    return TreeShape::caterpillar;
  }

  /// Induced topology on four leaves: 0 when unresolved, else the pairing
  /// index (1: ij|kl, 2: ik|jl, 3: il|jk).
  [[nodiscard]] int quartet(int i, int j, int k, int l) const {
    for (Split s : splits_) {
      auto in = [&](int x) { return ((s >> x) & 1u) != 0; };
      if (in(i) == in(j) && in(k) == in(l) && in(i) != in(k)) return 1;
      if (in(i) == in(k) && in(j) == in(l) && in(i) != in(j)) return 2;
      if (in(i) == in(l) && in(j) == in(k) && in(i) != in(j)) return 3;
    }
    return 0;
  }

  [[nodiscard]] std::string split_string(Split s) const {
    std::string a, b;
    for (int x = 0; x < leaves_; ++x) {
      std::string& side = ((s >> x) & 1u) ? b : a;
      if (!side.empty()) side += ",";
      side += labels_[x];
    }
    return "{" + a + "}|{" + b + "}";
  }

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.leaves_ == b.leaves_ && a.splits_ == b.splits_;
  }
  friend bool operator<(const LabeledTree& a, const LabeledTree& b) {
    return std::tie(a.leaves_, a.splits_) < std::tie(b.leaves_, b.splits_);
  }

private:
  void build_graph() {
    // Start from a star and refine one split at a time.
    graph_.adj.assign(leaves_ + 1, {});
    for (int x = 0; x < leaves_; ++x) connect(x, leaves_);
    for (Split s : splits_) refine(s);
  }

  void connect(int a, int b) {
    graph_.adj[a].push_back(b);
    graph_.adj[b].push_back(a);
  }

  void disconnect(int a, int b) {
    auto drop = [](std::vector<int>& v, int x) { v.erase(std::find(v.begin(), v.end(), x)); };
    drop(graph_.adj[a], b);
    drop(graph_.adj[b], a);
  }

  [[nodiscard]] Split branch_leaves(int from, int to) const {
    Split out = 0;
    std::vector<std::pair<int, int>> stack{{to, from}};
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      if (v < leaves_) out |= Split{1} << v;
      for (int u : graph_.adj[v])
        if (u != parent) stack.emplace_back(u, v);
    }
    return out;
  }

  void refine(Split s) {
    for (int v = leaves_; v < static_cast<int>(graph_.adj.size()); ++v) {
      std::vector<int> inside, outside;
      bool clean = true;
      for (int u : graph_.adj[v]) {
        const Split b = branch_leaves(v, u);
        if ((b & s) == b) inside.push_back(u);
        else if ((b & s) == 0) outside.push_back(u);
        else clean = false;
      }
      if (!clean || inside.size() < 2 || outside.size() < 2) continue;
      const int w = static_cast<int>(graph_.adj.size());
      graph_.adj.emplace_back();
      for (int u : inside) {
        disconnect(v, u);
        connect(w, u);
      }
      connect(v, w);
      return;
    }
    throw std::logic_error("LabeledTree: split could not be placed");
  }

  int leaves_ = 0;
  std::vector<Split> splits_;
  std::vector<std::string> labels_;
  Graph graph_;
};

/// Conic-term labels in the cyclic order of the support triangle boundary.
inline LabeledTree conic_tree(std::vector<Split> splits) {
  const auto& names = conic_term_names();
  return LabeledTree(6, std::move(splits), {names.begin(), names.end()});
}

/// All trivalent trees on n labelled leaves, by inserting leaf k into every
/// edge of each tree on leaves 0..k-1.
inline std::vector<LabeledTree> enumerate_trees(int n, std::vector<std::string> labels = {}) {
  if (n < 3) throw PreconditionError("enumerate_trees: need at least three leaves");
  if (n > 10) throw PreconditionError("enumerate_trees: too many leaves");
  // Edge lists; leaves are 0..n-1, internal nodes n, n+1, ...
  using Edges = std::vector<std::pair<int, int>>;
  std::vector<Edges> trees{{{0, n}, {1, n}, {2, n}}};
  for (int k = 3; k < n; ++k) {
    std::vector<Edges> next;
    for (const auto& t : trees) {
      const int fresh = n + (k - 2);
      for (std::size_t e = 0; e < t.size(); ++e) {
        Edges u = t;
        const auto [a, b] = u[e];
        u[e] = {a, fresh};
        u.emplace_back(fresh, b);
        u.emplace_back(k, fresh);
        next.push_back(std::move(u));
      }
    }
    trees = std::move(next);
  }
  std::vector<LabeledTree> out;
  for (const auto& t : trees) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : t) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    auto side = [&](int from, int to) {
      Split s = 0;
      std::vector<std::pair<int, int>> stack{{to, from}};
      while (!stack.empty()) {
        auto [v, parent] = stack.back();
        stack.pop_back();
        if (v < n) s |= Split{1} << v;
        for (int u : adj[v])
          if (u != parent) stack.emplace_back(u, v);
      }
      return s;
    };
    std::vector<Split> splits;
    for (auto [a, b] : t)
      if (a >= n && b >= n) splits.push_back(side(a, b));
    out.emplace_back(n, splits, labels);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline bool cyclic_arc(Split s, int n) {
  int changes = 0;
  for (int x = 0; x < n; ++x) changes += ((s >> x) & 1u) != ((s >> ((x + 1) % n)) & 1u);
  return changes == 2;
}

}  // namespace detail

/// Planar embedding with the leaves on a circle in the order
/// x^2, xy, y^2, yz, z^2, xz: every split is a cyclic arc.
inline bool is_planar_realizable(const LabeledTree& t) {
  if (t.leaves() != 6) throw PreconditionError("is_planar_realizable: expected six leaves");
  if (!t.trivalent()) throw PreconditionError("is_planar_realizable: tree is not trivalent");
  return std::all_of(t.splits().begin(), t.splits().end(), [](Split s) { return detail::cyclic_arc(s, 6); });
}

enum class Compatibility { compatible, incompatible, degenerate_support };

inline std::string to_string(Compatibility c) {
  switch (c) {
    case Compatibility::compatible: return "compatible";
    case Compatibility::incompatible: return "incompatible";
    case Compatibility::degenerate_support: return "degenerate_support";
  }
  return "?";
}

namespace detail {

using LatticePoint2 = std::pair<std::int64_t, std::int64_t>;

/// conv(p, q) is an edge of the polygon spanned by the quartet: all points
/// on one closed side of the line pq and none strictly between p and q.
inline bool quartet_edge(const std::array<LatticePoint2, 4>& pts, int p, int q) {
  const auto& P = pts[p];
  const auto& Q = pts[q];
  int left = 0, right = 0;
  for (int r = 0; r < 4; ++r) {
    if (r == p || r == q) continue;
    const auto& R = pts[r];
    const std::int64_t c = (Q.first - P.first) * (R.second - P.second) - (Q.second - P.second) * (R.first - P.first);
    if (c > 0) ++left;
    else if (c < 0) ++right;
    else {
      const std::int64_t d1 = (R.first - P.first) * (Q.first - P.first) + (R.second - P.second) * (Q.second - P.second);
      const std::int64_t d2 = (R.first - Q.first) * (P.first - Q.first) + (R.second - Q.second) * (P.second - Q.second);
      if (d1 > 0 && d2 > 0) return false;
    }
  }
  return left == 0 || right == 0;
}

}  // namespace detail

/// For every trivalent quartet ij|kl of the tree, conv(a_i, a_j) or
/// conv(a_k, a_l) must be an edge of conv(a_i, a_j, a_k, a_l).  Quartets
/// whose points are collinear or repeated are reported as degenerate.
inline Compatibility is_compatible(const LabeledTree& t, const std::vector<SupportPoint>& support) {
  const int n = t.leaves();
  if (static_cast<int>(support.size()) != n) throw PreconditionError("is_compatible: one support point per leaf");
  std::vector<detail::LatticePoint2> pts;
  for (const auto& s : support) pts.emplace_back(s.i, s.j);
  bool degenerate = false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const std::array<detail::LatticePoint2, 4> q{pts[i], pts[j], pts[k], pts[l]};
          bool flat = true;
          for (int r = 2; r < 4; ++r) {
            const auto &A = q[0], &B = q[1], &C = q[r];
            flat = flat && (B.first - A.first) * (C.second - A.second) == (B.second - A.second) * (C.first - A.first);
          }
          const bool repeated = std::set<detail::LatticePoint2>(q.begin(), q.end()).size() < 4;
          const int pairing = t.quartet(i, j, k, l);
          if (pairing == 0) continue;
          if (flat || repeated) {
            degenerate = true;
            continue;
          }
          // Local indices of the two pairs.
          static constexpr int pair_a[4][2] = {{0, 0}, {0, 1}, {0, 2}, {0, 3}};
          static constexpr int pair_b[4][2] = {{0, 0}, {2, 3}, {1, 3}, {1, 2}};
          if (!detail::quartet_edge(q, pair_a[pairing][0], pair_a[pairing][1]) &&
              !detail::quartet_edge(q, pair_b[pairing][0], pair_b[pairing][1]))
            return Compatibility::incompatible;
        }
  return degenerate ? Compatibility::degenerate_support : Compatibility::compatible;
}

}  // namespace tropic
