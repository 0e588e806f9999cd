#pragma once

// Tropical determinants as min-cost assignment problems.
//
// The optimal value comes from a shortest-augmenting-path Hungarian method
// over exact rationals.  Its final dual potentials (u, v) define the tight
// graph {(i,j) : a_ij = u_i + v_j}; by complementary slackness the optimal
// permutations are exactly the perfect matchings of that graph, so the
// matrix is tropically singular iff the tight graph has two of them.

#include "tropic/errors.hpp"
#include "tropic/matrix.hpp"

#include <optional>
#include <vector>

namespace tropic {

struct AssignmentResult {
  bool feasible = false;           // some permutation avoids every +inf entry
  Rational value;                  // optimal sum (meaningful when feasible)
  std::vector<int> row_to_col;     // one optimal permutation
  std::vector<Rational> row_potential;
  std::vector<Rational> col_potential;
};

/// Min-cost perfect matching, O(k^3).  +inf entries are forbidden edges.
inline AssignmentResult solve_assignment(const TropMatrix& a) {
  if (!a.is_square()) throw PreconditionError("assignment: matrix must be square");
  const int n = static_cast<int>(a.rows());
  AssignmentResult out;
  if (n == 0) {
    out.feasible = true;
    return out;
  }
  // 1-based arrays; column 0 is the virtual root of each search tree.
  std::vector<Rational> u(n + 1), v(n + 1);
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    match[0] = i;
    int j0 = 0;
    std::vector<std::optional<Rational>> minv(n + 1);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = match[j0];
      std::optional<Rational> delta;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const auto& entry = a(i0 - 1, j - 1);
        if (entry.is_finite()) {
          Rational cur = entry.value() - u[i0] - v[j];
          if (!minv[j] || cur < *minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] && (!delta || *minv[j] < *delta)) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (!delta) return out;  // no augmenting path: no finite permutation
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const int j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  out.feasible = true;
  out.row_to_col.assign(n, -1);
  for (int j = 1; j <= n; ++j) out.row_to_col[match[j] - 1] = j - 1;
  out.value = Rational(0);
  for (int i = 0; i < n; ++i) out.value += a(i, out.row_to_col[i]).value();
  out.row_potential.assign(u.begin() + 1, u.end());
  out.col_potential.assign(v.begin() + 1, v.end());
  return out;
}

namespace detail {

using Adjacency = std::vector<std::vector<bool>>;

/// Kuhn's algorithm restricted to rows >= first_row and free columns.
inline bool has_perfect_matching(const Adjacency& adj, int first_row, const std::vector<bool>& col_taken) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> owner(n, -1);
  std::vector<bool> seen;
  auto augment = [&](auto&& self, int row) -> bool {
    for (int j = 0; j < n; ++j) {
      if (!adj[row][j] || col_taken[j] || seen[j]) continue;
      seen[j] = true;
      if (owner[j] < 0 || self(self, owner[j])) {
        owner[j] = row;
        return true;
      }
    }
    return false;
  };
  for (int i = first_row; i < n; ++i) {
    seen.assign(n, false);
    if (!augment(augment, i)) return false;
  }
  return true;
}

/// First `limit` perfect matchings of `adj` in lexicographic order.
inline std::vector<std::vector<int>> lex_matchings(const Adjacency& adj, std::size_t limit) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> found;
  std::vector<int> current(n, -1);
  std::vector<bool> taken(n, false);
  auto descend = [&](auto&& self, int row) -> void {
    if (found.size() >= limit) return;
    if (row == n) {
      found.push_back(current);
      return;
    }
    for (int j = 0; j < n && found.size() < limit; ++j) {
      if (!adj[row][j] || taken[j]) continue;
      taken[j] = true;
      if (has_perfect_matching(adj, row + 1, taken)) {
        current[row] = j;
        self(self, row + 1);
      }
      taken[j] = false;
    }
  };
  descend(descend, 0);
  return found;
}

}  // namespace detail

struct DetCertificate {
  TropicalScalar value;
  /// True iff at least two permutations attain the minimum.  A matrix whose
  /// every permutation meets a +inf entry has value +inf and is reported
  /// non-singular.
  bool singular = false;
  /// Lexicographically smallest optimal permutation, plus the second
  /// smallest when singular.  Empty when the value is +inf.
  std::vector<std::vector<int>> witnesses;
};

/// The tight graph of an optimal assignment (optimal entries only).
inline detail::Adjacency tight_graph(const TropMatrix& a, const AssignmentResult& opt) {
  const std::size_t n = a.rows();
  detail::Adjacency adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[i][j] = a(i, j).is_finite() && a(i, j).value() == opt.row_potential[i] + opt.col_potential[j];
  return adj;
}

inline DetCertificate trop_det(const TropMatrix& a) {
  if (!a.is_square()) throw PreconditionError("trop_det: matrix must be square");
  DetCertificate cert;
  const auto opt = solve_assignment(a);
  if (!opt.feasible) return cert;
  cert.value = opt.value;
  const std::size_t n = a.rows();
  if (n == 0) {
    cert.witnesses.emplace_back();
    return cert;
  }
  auto adj = tight_graph(a, opt);
  // Singular iff removing some edge of one optimal matching leaves a
  // perfect matching.
  const std::vector<bool> none(n, false);
  for (std::size_t i = 0; i < n && !cert.singular; ++i) {
    const auto j = static_cast<std::size_t>(opt.row_to_col[i]);
    adj[i][j] = false;
    cert.singular = detail::has_perfect_matching(adj, 0, none);
    adj[i][j] = true;
  }
  cert.witnesses = detail::lex_matchings(adj, cert.singular ? 2 : 1);
  return cert;
}

inline bool is_tropically_singular(const TropMatrix& a) { return trop_det(a).singular; }

/// Sum of the entries selected by a permutation (row i -> column perm[i]).
inline TropicalScalar permutation_weight(const TropMatrix& a, const std::vector<int>& perm) {
  TropicalScalar w(0);
  for (std::size_t i = 0; i < perm.size(); ++i) w = trop_mul(w, a(i, static_cast<std::size_t>(perm[i])));
  return w;
}

}  // namespace tropic
