#pragma once

// Stable solutions of (n-1) x n tropical linear systems: tropical Cramer's
// rule and the linkage-tree construction through a transportation problem.

#include "tropic/determinant.hpp"
#include "tropic/errors.hpp"
#include "tropic/transportation.hpp"

#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tropic {

/// Spanning tree on nodes 0..n-1; edges[i] is the edge labelled by row i.
struct LinkageTree {
  std::size_t nodes = 0;
  std::vector<std::pair<int, int>> edges;

  [[nodiscard]] std::vector<int> degrees() const {
    std::vector<int> deg(nodes, 0);
    for (auto [a, b] : edges) {
      ++deg[a];
      ++deg[b];
    }
    return deg;
  }
};

struct StableSolution {
  std::vector<TropicalScalar> coords;  // coords[j] = det of C without column j
  std::vector<DetCertificate> minors;
  std::optional<LinkageTree> linkage_tree;
};

inline void require_cramer_shape(const TropMatrix& c, const char* who) {
  if (c.cols() == 0 || c.rows() + 1 != c.cols()) {
    std::ostringstream msg;
    msg << who << ": expected an (n-1) x n matrix, got " << c.rows() << " x " << c.cols();
    throw PreconditionError(msg.str());
  }
}

/// The maximal minors of an (n-1) x n matrix, minors[j] deleting column j.
inline std::vector<DetCertificate> maximal_minors(const TropMatrix& c) {
  std::vector<DetCertificate> minors;
  minors.reserve(c.cols());
  for (std::size_t j = 0; j < c.cols(); ++j) minors.push_back(trop_det(c.without_columns({j})));
  return minors;
}

struct LinkageSolution {
  LinkageTree tree;
  std::vector<Rational> point;       // normalized with point[0] = 0
  TransportationResult transport;
};

/// Solves the transportation problem with cost C, row sums n and column
/// sums n-1, reads the linkage tree off its unique optimum and solves the
/// two-term equations along the tree edges.
inline LinkageSolution linkage_tree(const TropMatrix& c) {
  require_cramer_shape(c, "linkage_tree");
  if (!c.all_finite()) throw PreconditionError("linkage_tree: entries must be finite");
  const std::size_t n = c.cols();
  const auto minors = maximal_minors(c);
  for (std::size_t j = 0; j < n; ++j)
    if (minors[j].singular)
      throw PreconditionError("linkage_tree: singular submatrix (column " + std::to_string(j) + " deleted)");

  std::vector<std::vector<Rational>> cost(n - 1, std::vector<Rational>(n));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[i][j] = c(i, j).value();
  LinkageSolution out;
  out.transport = solve_transportation(cost, std::vector<long>(n - 1, static_cast<long>(n)),
                                       std::vector<long>(n, static_cast<long>(n - 1)));
  if (!out.transport.unique) throw std::logic_error("linkage_tree: transportation optimum is not unique");

  out.tree.nodes = n;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, row)
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<int> support;
    for (std::size_t j = 0; j < n; ++j)
      if (out.transport.plan[i][j] != 0) support.push_back(static_cast<int>(j));
    if (support.size() != 2)
      throw std::logic_error("linkage_tree: optimal plan row " + std::to_string(i) + " does not have two entries");
    out.tree.edges.emplace_back(support[0], support[1]);
    adj[support[0]].emplace_back(support[1], static_cast<int>(i));
    adj[support[1]].emplace_back(support[0], static_cast<int>(i));
  }

  // c_{i,a} + p_a = c_{i,b} + p_b along each tree edge.
  std::vector<std::optional<Rational>> p(n);
  p[0] = Rational(0);
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int a = todo.front();
    todo.pop();
    for (auto [b, row] : adj[a]) {
      if (p[b]) continue;
      p[b] = cost[row][a] + *p[a] - cost[row][b];
      todo.push(b);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!p[j]) throw std::logic_error("linkage_tree: edges do not span all nodes");
    out.point.push_back(*p[j]);
  }
  return out;
}

/// Tropical Cramer's rule: coordinate j is the maximal minor deleting
/// column j.  The linkage tree is attached when every minor is
/// non-singular.
inline StableSolution cramer_solve(const TropMatrix& c) {
  require_cramer_shape(c, "cramer_solve");
  if (!c.all_finite()) throw PreconditionError("cramer_solve: entries must be finite");
  StableSolution sol;
  sol.minors = maximal_minors(c);
  bool generic = true;
  for (const auto& m : sol.minors) {
    sol.coords.push_back(m.value);
    generic = generic && !m.singular;
  }
  if (generic) sol.linkage_tree = linkage_tree(c).tree;
  return sol;
}

/// Equality of finite vectors modulo the all-ones vector.
inline bool projectively_equal(const std::vector<TropicalScalar>& a, const std::vector<TropicalScalar>& b) {
  if (a.size() != b.size() || a.empty()) return a.size() == b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].is_infinite() != b[i].is_infinite()) return false;
  std::optional<Rational> shift;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_infinite()) continue;
    Rational d = a[i].value() - b[i].value();
    if (!shift) shift = d;
    else if (*shift != d) return false;
  }
  return true;
}

/// True iff min_j (row_j + x_j) is attained at least twice.
inline bool min_attained_twice(const std::vector<TropicalScalar>& terms) {
  std::optional<TropicalScalar> best;
  int count = 0;
  for (const auto& t : terms) {
    if (t.is_infinite()) continue;
    if (!best || t < *best) {
      best = t;
      count = 1;
    } else if (t == *best) {
      ++count;
    }
  }
  return count >= 2;
}

/// Whether x lies on the tropical hyperplane of every row of C.
inline bool solves_rows(const TropMatrix& c, const std::vector<TropicalScalar>& x) {
  for (std::size_t i = 0; i < c.rows(); ++i) {
    std::vector<TropicalScalar> terms;
    for (std::size_t j = 0; j < c.cols(); ++j) terms.push_back(trop_mul(c(i, j), x[j]));
    if (!min_attained_twice(terms)) return false;
  }
  return true;
}

}  // namespace tropic
