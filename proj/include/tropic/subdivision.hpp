#pragma once

// Regular subdivision of a support set induced by lifting each point
// (i, j) to the height of its coefficient and projecting the lower faces.

#include "tropic/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace tropic {

struct LatticePoint {
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline std::int64_t lattice_cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
}

inline std::int64_t lattice_length(const LatticePoint& a, const LatticePoint& b) {
  return std::gcd(a.i - b.i, a.j - b.j);
}

/// A lower face of the lift: the lifted points on it satisfy a = α i + β j + γ.
struct SubdivisionCell {
  std::vector<std::size_t> vertices;  // polygon corners, counterclockwise
  std::vector<std::size_t> points;    // every support point lying on the face
  Rational alpha, beta, gamma;
};

struct SubdivisionEdge {
  std::size_t a = 0;  // support indices of the endpoints, a < b
  std::size_t b = 0;
  std::vector<std::size_t> cells;  // one (boundary) or two (interior); none for 1-dimensional supports
  std::int64_t lattice_length = 0;

  [[nodiscard]] bool interior() const { return cells.size() == 2; }
};

struct RegularSubdivision {
  std::vector<SupportPoint> support;   // finite terms only
  std::vector<LatticePoint> lattice;   // projection (i, j)
  std::vector<Rational> lift;
  int dimension = -1;                  // affine dimension of the support
  std::vector<SubdivisionCell> cells;
  std::vector<SubdivisionEdge> edges;
};

namespace detail {

/// Convex hull corners (no collinear points), counterclockwise from the
/// lowest-leftmost point.
inline std::vector<std::size_t> hull_ccw(const std::vector<LatticePoint>& pts, std::vector<std::size_t> idx) {
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;
  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t p : idx) {
    while (k >= 2 && lattice_cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[p]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    std::size_t p = idx[t];
    while (k >= lower && lattice_cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[p]) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace detail

inline RegularSubdivision regular_subdivision(const TropicalPolynomial& f) {
  RegularSubdivision sub;
  for (const auto& [s, c] : f.finite_terms()) {
    sub.support.push_back(s);
    sub.lattice.push_back({s.i, s.j});
    sub.lift.push_back(c);
  }
  const std::size_t m = sub.support.size();
  if (m == 0) throw PreconditionError("regular_subdivision: polynomial has no finite coefficient");
  if (m == 1) {
    sub.dimension = 0;
    return sub;
  }

  // Affine dimension.
  sub.dimension = 1;
  for (std::size_t c = 2; c < m && sub.dimension == 1; ++c)
    for (std::size_t b = 1; b < c; ++b)
      if (lattice_cross(sub.lattice[0], sub.lattice[b], sub.lattice[c]) != 0) {
        sub.dimension = 2;
        break;
      }

  if (sub.dimension == 1) {
    // Lower hull of (t, a) along the supporting line.
    const LatticePoint o = sub.lattice[0];
    std::size_t far = 1;
    for (std::size_t p = 1; p < m; ++p)
      if (sub.lattice[p] != o) far = p;
    const std::int64_t di = sub.lattice[far].i - o.i, dj = sub.lattice[far].j - o.j;
    auto param = [&](std::size_t p) { return (sub.lattice[p].i - o.i) * di + (sub.lattice[p].j - o.j) * dj; };
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return param(a) < param(b); });
    std::vector<std::size_t> lower;
    for (std::size_t p : order) {
      while (lower.size() >= 2) {
        const std::size_t q = lower[lower.size() - 2], r = lower.back();
        // Drop r if it is on or above the chord q -> p.
        const Rational tq(param(q)), tr(param(r)), tp(param(p));
        if ((sub.lift[r] - sub.lift[q]) * (tp - tq) >= (sub.lift[p] - sub.lift[q]) * (tr - tq)) lower.pop_back();
        else break;
      }
      lower.push_back(p);
    }
    for (std::size_t e = 0; e + 1 < lower.size(); ++e) {
      SubdivisionEdge edge;
      edge.a = std::min(lower[e], lower[e + 1]);
      edge.b = std::max(lower[e], lower[e + 1]);
      edge.lattice_length = lattice_length(sub.lattice[edge.a], sub.lattice[edge.b]);
      sub.edges.push_back(edge);
    }
    return sub;
  }

  std::set<std::vector<std::size_t>> seen;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      for (std::size_t r = q + 1; r < m; ++r) {
        const auto& P = sub.lattice[p];
        const auto& Q = sub.lattice[q];
        const auto& R = sub.lattice[r];
        const std::int64_t nz = lattice_cross(P, Q, R);
        if (nz == 0) continue;
        // Normal (nx, ny, nz) of the lifted triangle.
        const Rational dqa = sub.lift[q] - sub.lift[p], dra = sub.lift[r] - sub.lift[p];
        const Rational nx = Rational(Q.j - P.j) * dra - dqa * Rational(R.j - P.j);
        const Rational ny = dqa * Rational(R.i - P.i) - Rational(Q.i - P.i) * dra;
        const Rational alpha = -nx / Rational(nz);
        const Rational beta = -ny / Rational(nz);
        const Rational gamma = sub.lift[p] - alpha * Rational(P.i) - beta * Rational(P.j);
        std::vector<std::size_t> on_face;
        bool lower = true;
        for (std::size_t t = 0; t < m && lower; ++t) {
          const Rational h = alpha * Rational(sub.lattice[t].i) + beta * Rational(sub.lattice[t].j) + gamma;
          if (sub.lift[t] < h) lower = false;
          else if (sub.lift[t] == h) on_face.push_back(t);
        }
        if (!lower || !seen.insert(on_face).second) continue;
        SubdivisionCell cell;
        cell.points = on_face;
        cell.vertices = detail::hull_ccw(sub.lattice, on_face);
        cell.alpha = alpha;
        cell.beta = beta;
        cell.gamma = gamma;
        sub.cells.push_back(std::move(cell));
      }

  // Deterministic cell order: by the dual vertex (-α, -β).
  std::sort(sub.cells.begin(), sub.cells.end(), [](const SubdivisionCell& x, const SubdivisionCell& y) {
    return std::make_pair(-x.alpha, -x.beta) < std::make_pair(-y.alpha, -y.beta);
  });

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;
  for (std::size_t c = 0; c < sub.cells.size(); ++c) {
    const auto& v = sub.cells[c].vertices;
    for (std::size_t t = 0; t < v.size(); ++t) {
      auto key = std::minmax(v[t], v[(t + 1) % v.size()]);
      auto [it, fresh] = edge_index.try_emplace({key.first, key.second}, sub.edges.size());
      if (fresh) {
        SubdivisionEdge e;
        e.a = key.first;
        e.b = key.second;
        e.lattice_length = lattice_length(sub.lattice[e.a], sub.lattice[e.b]);
        sub.edges.push_back(e);
      }
      sub.edges[it->second].cells.push_back(c);
    }
  }
  return sub;
}

}  // namespace tropic
