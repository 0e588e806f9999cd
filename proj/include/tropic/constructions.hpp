#pragma once

// Joins, meets and the conic through five points.

#include "tropic/conic.hpp"
#include "tropic/cramer.hpp"
#include "tropic/curve.hpp"
#include "tropic/intersection.hpp"

#include <array>
#include <optional>
#include <vector>

namespace tropic {

/// Coefficients of u1 ⊙ x ⊕ u2 ⊙ y ⊕ u3 ⊙ z.
using LineCoeffs = Triple;

namespace detail {

inline void require_finite(const Triple& t, const char* who) {
  for (const auto& c : t)
    if (c.is_infinite()) throw PreconditionError(std::string(who) + ": entries must be finite");
}

}  // namespace detail

/// a ⊗ b = (a2 b3 ⊕ a3 b2, a3 b1 ⊕ a1 b3, a1 b2 ⊕ a2 b1).
inline Triple trop_cross(const Triple& a, const Triple& b) {
  detail::require_finite(a, "trop_cross");
  detail::require_finite(b, "trop_cross");
  auto term = [&](std::size_t i, std::size_t j) { return trop_add(trop_mul(a[i], b[j]), trop_mul(a[j], b[i])); };
  return {term(1, 2), term(2, 0), term(0, 1)};
}

inline LineCoeffs stable_join(const ProjectivePoint& p, const ProjectivePoint& q) {
  return trop_cross(to_triple(p), to_triple(q));
}

inline ProjectivePoint stable_meet(const LineCoeffs& l, const LineCoeffs& m) { return to_point(trop_cross(l, m)); }

inline bool line_contains(const LineCoeffs& l, const ProjectivePoint& p) {
  return point_on_curve(line_polynomial(l), p);
}

/// Row (2x, x+y, 2y, y+z, 2z, x+z) of the conic coefficient matrix.
inline std::vector<TropicalScalar> conic_row(const ProjectivePoint& p) {
  const Rational &x = p[0], &y = p[1], &z = p[2];
  return {x + x, x + y, y + y, y + z, z + z, x + z};
}

inline TropMatrix conic_matrix(const std::vector<ProjectivePoint>& points) {
  std::vector<std::vector<TropicalScalar>> rows;
  for (const auto& p : points) rows.push_back(conic_row(p));
  return TropMatrix::from_rows(rows);
}

/// Stable conic: a_τ is the 5 x 5 minor deleting column τ.
inline StableSolution conic_through_five_solution(const std::vector<ProjectivePoint>& points) {
  if (points.size() != 5) throw PreconditionError("conic_through_five: expected five points");
  return cramer_solve(conic_matrix(points));
}

inline ConicCoeffs conic_through_five(const std::vector<ProjectivePoint>& points) {
  const auto sol = conic_through_five_solution(points);
  ConicCoeffs a;
  for (std::size_t t = 0; t < 6; ++t) a[t] = sol.coords[t];
  return a;
}

/// Tropical product of two lines.
inline ConicCoeffs line_product(const LineCoeffs& u, const LineCoeffs& v) {
  auto mixed = [&](std::size_t i, std::size_t j) { return trop_add(trop_mul(u[i], v[j]), trop_mul(u[j], v[i])); };
  return {trop_mul(u[0], v[0]), mixed(0, 1), trop_mul(u[1], v[1]),
          mixed(1, 2),          trop_mul(u[2], v[2]), mixed(0, 2)};
}

struct ConcurrencyResult {
  bool concurrent = false;
  std::optional<ProjectivePoint> witness;
};

namespace detail {

inline PlaneCurveGraph piece_graph(const OverlapPiece& piece) {
  PlaneCurveGraph g;
  g.vertices.emplace_back(piece.start);
  if (piece.kind == OverlapPiece::Kind::segment) {
    g.vertices.emplace_back(piece.end);
    g.bounded_edges.push_back({0, 1, 1});
  } else if (piece.kind == OverlapPiece::Kind::ray) {
    g.rays.push_back({0, piece.direction, 1});
  }
  return g;
}

}  // namespace detail

/// Decided on the point sets: L1 ∩ L2 split into points, segments and rays,
/// each then met with L3.
inline ConcurrencyResult lines_concurrent(const LineCoeffs& l1, const LineCoeffs& l2, const LineCoeffs& l3) {
  detail::require_finite(l1, "lines_concurrent");
  detail::require_finite(l2, "lines_concurrent");
  detail::require_finite(l3, "lines_concurrent");
  const auto g1 = build_curve(line_polynomial(l1));
  const auto g2 = build_curve(line_polynomial(l2));
  const auto g3 = build_curve(line_polynomial(l3));
  for (const auto& piece : geometric_intersection(g1, g2)) {
    if (piece.kind == OverlapPiece::Kind::point) {
      const ProjectivePoint p(piece.start);
      if (graph_contains(g3, p)) return {true, p};
      continue;
    }
    const auto hits = geometric_intersection(detail::piece_graph(piece), g3);
    if (!hits.empty()) return {true, ProjectivePoint(hits.front().start)};
  }
  return {};
}

}  // namespace tropic
