#pragma once

// The pencil of conics through four generic points: a tropical line in TP^5
// whose combinatorial type is a tree with the six conic terms as leaves.

#include "tropic/constructions.hpp"
#include "tropic/trees.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropic {

struct PlueckerEntry {
  int i = 0;  // deleted columns, i < j
  int j = 0;
  DetCertificate minor;
};

struct QuartetSplit {
  std::array<int, 4> leaves{};
  std::array<Rational, 3> sums;  // p_ij + p_kl, p_ik + p_jl, p_il + p_jk
  int pairing = 0;               // 1, 2, 3 name the split; 0 when all sums tie
};

struct DistinguishedConic {
  enum class Kind { line_pair, vertex, limit } kind = Kind::limit;
  std::string label;
  ConicCoeffs coeffs;
  int point = -1;  // input point that is a vertex (vertex conics)
  int term = -1;   // missing term (limit conics)
};

struct PencilResult {
  std::vector<ProjectivePoint> points;
  TropMatrix matrix;
  std::vector<PlueckerEntry> pluecker;  // 15 entries, lexicographic in (i, j)
  std::vector<QuartetSplit> quartets;
  LabeledTree tree;
  TreeShape shape = TreeShape::non_trivalent;
  std::vector<DistinguishedConic> line_pairs;
  std::vector<DistinguishedConic> vertex_conics;
  std::vector<DistinguishedConic> limit_conics;
  std::array<ConicCoeffs, 6> attach;  // where each leaf ray leaves the bounded part

  [[nodiscard]] const Rational& p(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (const auto& e : pluecker)
      if (e.i == i && e.j == j) return e.minor.value.value();
    throw std::out_of_range("PencilResult::p: no such pair");
  }
};

/// Membership in the tropical line with the given Plücker data: for every
/// three terms i, j, k the minimum of p_jk + a_i, p_ik + a_j, p_ij + a_k is
/// attained twice.
inline bool on_pencil(const PencilResult& pencil, const ConicCoeffs& a) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        const std::vector<TropicalScalar> terms{trop_mul(pencil.p(j, k), a[i]), trop_mul(pencil.p(i, k), a[j]),
                                                trop_mul(pencil.p(i, j), a[k])};
        if (!min_attained_twice(terms)) return false;
      }
  return true;
}

/// The terms attaining the minimum at p span a 2-cell of the subdivision.
inline bool is_vertex_of(const ConicCoeffs& a, const ProjectivePoint& p) {
  const auto row = conic_row(p);
  std::optional<Rational> low;
  for (std::size_t t = 0; t < 6; ++t)
    if (a[t].is_finite()) {
      const Rational v = a[t].value() + row[t].value();
      if (!low || v < *low) low = v;
    }
  if (!low) return false;
  std::vector<LatticePoint> cell;
  for (std::size_t t = 0; t < 6; ++t)
    if (a[t].is_finite() && a[t].value() + row[t].value() == *low)
      cell.push_back({conic_support()[t].i, conic_support()[t].j});
  for (std::size_t c = 2; c < cell.size(); ++c)
    for (std::size_t b = 1; b < c; ++b)
      if (lattice_cross(cell[0], cell[b], cell[c]) != 0) return true;
  return false;
}

namespace detail {

inline bool same_conic(const ConicCoeffs& a, const ConicCoeffs& b) {
  return projectively_equal({a.begin(), a.end()}, {b.begin(), b.end()});
}

inline ConicCoeffs finite_conic_coeffs(const std::array<Rational, 6>& v) {
  ConicCoeffs a;
  for (std::size_t t = 0; t < 6; ++t) a[t] = v[t];
  return a;
}

/// Conics of the pencil having point m as a vertex, searched on the
/// tropical segment min(λ + x, y) between two attach points.
inline void vertex_events_on_segment(const std::array<Rational, 6>& x, const std::array<Rational, 6>& y,
                                     const std::vector<TropicalScalar>& row, std::vector<ConicCoeffs>& found) {
  Rational lo = y[0] - x[0], hi = lo;
  for (std::size_t s = 0; s < 6; ++s) {
    lo = min(lo, y[s] - x[s]);
    hi = max(hi, y[s] - x[s]);
  }
  std::set<Rational> candidates{lo, hi};
  for (std::size_t s = 0; s < 6; ++s) {
    candidates.insert(y[s] - x[s]);
    for (std::size_t r = 0; r < 6; ++r)
      if (r != s) candidates.insert(row[r].value() + y[r] - row[s].value() - x[s]);
  }
  for (const auto& lambda : candidates) {
    if (lambda < lo || lambda > hi) continue;
    std::array<Rational, 6> c;
    for (std::size_t s = 0; s < 6; ++s) c[s] = min(lambda + x[s], y[s]);
    found.push_back(finite_conic_coeffs(c));
  }
}

inline void vertex_events_on_leaf(const std::array<Rational, 6>& x, std::size_t tau,
                                  const std::vector<TropicalScalar>& row, std::vector<ConicCoeffs>& found) {
  std::set<Rational> candidates{Rational(0)};
  for (std::size_t r = 0; r < 6; ++r) {
    if (r == tau) continue;
    const Rational t = row[r].value() + x[r] - row[tau].value() - x[tau];
    if (t.sign() >= 0) candidates.insert(t);
  }
  for (const auto& t : candidates) {
    std::array<Rational, 6> c = x;
    c[tau] += t;
    found.push_back(finite_conic_coeffs(c));
  }
}

}  // namespace detail

/// Requires all fifteen 4 x 4 minors of the coefficient matrix to be
/// tropically non-singular.
inline PencilResult pencil_through_four(const std::vector<ProjectivePoint>& points) {
  if (points.size() != 4) throw PreconditionError("pencil_through_four: expected four points");
  PencilResult out;
  out.points = points;
  out.matrix = conic_matrix(points);
  const auto& names = conic_term_names();

  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      PlueckerEntry e{i, j, trop_det(out.matrix.without_columns({static_cast<std::size_t>(i),
                                                                  static_cast<std::size_t>(j)}))};
      if (e.minor.singular) {
        std::string cols;
        for (int c = 0; c < 6; ++c)
          if (c != i && c != j) cols += (cols.empty() ? "" : ", ") + names[c];
        throw PreconditionError("pencil_through_four: singular 4x4 submatrix (columns " + cols + ")");
      }
      out.pluecker.push_back(std::move(e));
    }

  // Quartet topologies: the pairing whose sum is not minimal names the split.
  std::map<std::array<int, 4>, int> topology;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        for (int l = k + 1; l < 6; ++l) {
          QuartetSplit q;
          q.leaves = {i, j, k, l};
          q.sums = {out.p(i, j) + out.p(k, l), out.p(i, k) + out.p(j, l), out.p(i, l) + out.p(j, k)};
          const Rational low = min(q.sums[0], min(q.sums[1], q.sums[2]));
          const int attained = (q.sums[0] == low) + (q.sums[1] == low) + (q.sums[2] == low);
          if (attained == 1) throw std::logic_error("pencil_through_four: quartet violates the Plücker relation");
          if (attained == 2)
            for (int s = 0; s < 3; ++s)
              if (q.sums[s] != low) q.pairing = s + 1;
          topology[q.leaves] = q.pairing;
          out.quartets.push_back(q);
        }

  // A bipartition is a split when every cross quartet agrees with it.
  std::vector<Split> splits;
  for (Split s = 1; s < (1u << 6); ++s) {
    if (s & 1u) continue;
    const int size = __builtin_popcount(s);
    if (size < 2 || size > 4) continue;
    bool agrees = true;
    for (const auto& [leaves, pairing] : topology) {
      auto in = [&](int x) { return ((s >> leaves[x]) & 1u) != 0; };
      const int inside = in(0) + in(1) + in(2) + in(3);
      if (inside != 2) continue;
      const int expected = in(0) == in(1) ? 1 : (in(0) == in(2) ? 2 : 3);
      if (pairing != expected) agrees = false;
    }
    if (agrees) splits.push_back(s);
  }
  for (std::size_t a = 0; a < splits.size(); ++a)
    for (std::size_t b = a + 1; b < splits.size(); ++b)
      if (!splits_compatible(splits[a], splits[b], 6))
        throw std::logic_error("pencil_through_four: quartet splits do not form a tree");
  out.tree = conic_tree(splits);
  out.shape = out.tree.shape();

  // Attach points: a_σ = p_τσ off the leaf, a_τ = max(p_τj + p_τk - p_jk).
  std::array<std::array<Rational, 6>, 6> attach;
  for (int tau = 0; tau < 6; ++tau) {
    std::optional<Rational> top;
    for (int j = 0; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        if (j == tau || k == tau) continue;
        const Rational v = out.p(tau, j) + out.p(tau, k) - out.p(j, k);
        if (!top || v > *top) top = v;
      }
    ConicCoeffs limit;
    for (int s = 0; s < 6; ++s) {
      attach[tau][s] = s == tau ? *top : out.p(tau, s);
      limit[s] = s == tau ? TropicalScalar::infinity() : TropicalScalar(out.p(tau, s));
    }
    out.attach[tau] = detail::finite_conic_coeffs(attach[tau]);
    out.limit_conics.push_back({DistinguishedConic::Kind::limit, "no " + names[tau], limit, -1, tau});
  }

  static constexpr int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& pr : pairs) {
    const ConicCoeffs c = line_product(stable_join(points[pr[0]], points[pr[1]]),
                                       stable_join(points[pr[2]], points[pr[3]]));
    const std::string label = std::to_string(pr[0] + 1) + std::to_string(pr[1] + 1) + "|" +
                              std::to_string(pr[2] + 1) + std::to_string(pr[3] + 1);
    out.line_pairs.push_back({DistinguishedConic::Kind::line_pair, label, c});
  }

  // Sweep the bounded part (tropical segments between attach points) and
  // the leaf rays for conics having an input point as a vertex.
  for (int m = 0; m < 4; ++m) {
    const auto row = conic_row(points[m]);
    std::vector<ConicCoeffs> candidates;
    for (int s = 0; s < 6; ++s) {
      detail::vertex_events_on_leaf(attach[s], static_cast<std::size_t>(s), row, candidates);
      for (int t = s + 1; t < 6; ++t) detail::vertex_events_on_segment(attach[s], attach[t], row, candidates);
    }
    std::vector<ConicCoeffs> kept;
    for (const auto& c : candidates) {
      if (!is_vertex_of(c, points[m])) continue;
      auto norm = c;
      const Rational shift = c[0].value();
      for (auto& v : norm) v = v.value() - shift;
      if (std::none_of(kept.begin(), kept.end(), [&](const ConicCoeffs& k) { return detail::same_conic(k, norm); }))
        kept.push_back(norm);
    }
    std::sort(kept.begin(), kept.end());
    for (const auto& c : kept)
      out.vertex_conics.push_back(
          {DistinguishedConic::Kind::vertex, "vertex at " + std::to_string(m + 1), c, m, -1});
  }
  return out;
}

}  // namespace tropic
