#pragma once

// Plane tropical curves as balanced rational graphs, built from the dual
// regular subdivision.

#include "tropic/polynomial.hpp"
#include "tropic/subdivision.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tropic {

/// Primitive integer vector in Z^3 / Z(1,1,1), stored with last coordinate 0.
struct Direction {
  std::int64_t dx = 0;
  std::int64_t dy = 0;

  [[nodiscard]] Vec2 vec() const { return {Rational(dx), Rational(dy)}; }
  [[nodiscard]] Direction operator-() const { return {-dx, -dy}; }
  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;
};

inline Direction primitive_direction(std::int64_t x, std::int64_t y) {
  const std::int64_t g = std::gcd(x, y);
  if (g == 0) throw std::invalid_argument("primitive_direction: zero vector");
  return {x / g, y / g};
}

/// Primitive integer direction of a rational vector, and the number of
/// primitive steps (a rational lattice length) it spans.
inline std::pair<Direction, Rational> primitive_direction(const Vec2& v) {
  if (v.x.sign() == 0 && v.y.sign() == 0) throw std::invalid_argument("primitive_direction: zero vector");
  // Scale to integers by the lcm of denominators.
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), v.x.raw().get_den_mpz_t(), v.y.raw().get_den_mpz_t());
  mpz_class xi = v.x.raw().get_num() * (l / v.x.raw().get_den());
  mpz_class yi = v.y.raw().get_num() * (l / v.y.raw().get_den());
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), xi.get_mpz_t(), yi.get_mpz_t());
  xi /= g;
  yi /= g;
  if (!xi.fits_slong_p() || !yi.fits_slong_p()) throw std::overflow_error("primitive_direction: direction too large");
  Direction d{xi.get_si(), yi.get_si()};
  Rational steps = d.dx != 0 ? v.x / Rational(d.dx) : v.y / Rational(d.dy);
  return {d, steps};
}

struct CurveEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t multiplicity = 1;
};

struct CurveRay {
  std::size_t vertex = 0;
  Direction direction;
  std::int64_t multiplicity = 1;
};

struct PlaneCurveGraph {
  std::vector<ProjectivePoint> vertices;
  std::vector<CurveEdge> bounded_edges;
  std::vector<CurveRay> rays;
  std::optional<RegularSubdivision> subdivision;
  // Dual subdivision edge of each bounded edge and ray (indices into subdivision->edges).
  std::vector<std::size_t> edge_dual;
  std::vector<std::size_t> ray_dual;

  [[nodiscard]] bool empty() const { return vertices.empty(); }
};

namespace detail {

inline Direction inward_normal(const RegularSubdivision& sub, const SubdivisionEdge& e, const SubdivisionCell& cell) {
  const LatticePoint& a = sub.lattice[e.a];
  const LatticePoint& b = sub.lattice[e.b];
  Direction n = primitive_direction(-(b.j - a.j), b.i - a.i);
  for (std::size_t p : cell.vertices) {
    const std::int64_t s = n.dx * (sub.lattice[p].i - a.i) + n.dy * (sub.lattice[p].j - a.j);
    if (s < 0) return -n;
    if (s > 0) return n;
  }
  throw std::logic_error("inward_normal: degenerate cell");
}

}  // namespace detail

/// Called with every graph build_curve returns; empty by default.  Test
/// harnesses use it to audit all curves built during a run.
inline std::function<void(const PlaneCurveGraph&)>& curve_observer() {
  static std::function<void(const PlaneCurveGraph&)> observer;
  return observer;
}

/// One vertex per 2-cell, one bounded edge per interior edge and one ray per
/// boundary edge.  A collinear support yields a union of classical lines;
/// each is stored as a vertex at its foot point carrying two opposite rays.
inline PlaneCurveGraph build_curve(const TropicalPolynomial& f) {
  PlaneCurveGraph g;
  RegularSubdivision sub = regular_subdivision(f);

  if (sub.dimension == 1) {
    for (std::size_t e = 0; e < sub.edges.size(); ++e) {
      const auto& edge = sub.edges[e];
      const LatticePoint& P = sub.lattice[edge.a];
      const LatticePoint& Q = sub.lattice[edge.b];
      // Terms P and Q tie on the line (P - Q) . x = a_Q - a_P.
      const Vec2 n{Rational(P.i - Q.i), Rational(P.j - Q.j)};
      const Rational t = (sub.lift[edge.b] - sub.lift[edge.a]) / dot(n, n);
      g.vertices.emplace_back(t * n);
      const Direction d = primitive_direction(-(P.j - Q.j), P.i - Q.i);
      g.rays.push_back({g.vertices.size() - 1, d, edge.lattice_length});
      g.rays.push_back({g.vertices.size() - 1, -d, edge.lattice_length});
      g.ray_dual.push_back(e);
      g.ray_dual.push_back(e);
    }
  } else if (sub.dimension == 2) {
    for (const auto& cell : sub.cells) g.vertices.emplace_back(Vec2{-cell.alpha, -cell.beta});
    for (std::size_t e = 0; e < sub.edges.size(); ++e) {
      const auto& edge = sub.edges[e];
      if (edge.interior()) {
        g.bounded_edges.push_back({edge.cells[0], edge.cells[1], edge.lattice_length});
        g.edge_dual.push_back(e);
      } else {
        const auto& cell = sub.cells[edge.cells[0]];
        g.rays.push_back({edge.cells[0], detail::inward_normal(sub, edge, cell), edge.lattice_length});
        g.ray_dual.push_back(e);
      }
    }
  }
  g.subdivision = std::move(sub);
  if (curve_observer()) curve_observer()(g);
  return g;
}

struct BalanceReport {
  bool balanced = true;
  std::optional<std::size_t> vertex;  // first violating vertex
  Vec2 residual;                      // Σ m_i v_i at that vertex
  std::string message;
};

/// Equilibrium Σ m_i v_i = 0 over primitive outgoing directions at every vertex.
inline BalanceReport check_balancing(const PlaneCurveGraph& g) {
  std::vector<Vec2> sum(g.vertices.size(), Vec2{Rational(0), Rational(0)});
  for (const auto& e : g.bounded_edges) {
    if (e.multiplicity < 1) return {false, e.from, {}, "edge with non-positive multiplicity"};
    const Vec2 v = g.vertices[e.to].chart() - g.vertices[e.from].chart();
    const Direction d = primitive_direction(v).first;
    sum[e.from] = sum[e.from] + Rational(e.multiplicity) * d.vec();
    sum[e.to] = sum[e.to] - Rational(e.multiplicity) * d.vec();
  }
  for (const auto& r : g.rays) {
    if (r.multiplicity < 1) return {false, r.vertex, {}, "ray with non-positive multiplicity"};
    sum[r.vertex] = sum[r.vertex] + Rational(r.multiplicity) * r.direction.vec();
  }
  for (std::size_t v = 0; v < sum.size(); ++v)
    if (sum[v].x.sign() != 0 || sum[v].y.sign() != 0) {
      std::ostringstream msg;
      msg << "vertex " << v << " at " << g.vertices[v].normalized() << " has residual " << sum[v];
      return {false, v, sum[v], msg.str()};
    }
  return {};
}

/// Closed segment membership.
inline bool on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (cross(b - a, p - a).sign() != 0) return false;
  return dot(p - a, b - a).sign() >= 0 && dot(p - b, a - b).sign() >= 0;
}

/// Closed ray membership.
inline bool on_ray(const Vec2& p, const Vec2& base, const Vec2& dir) {
  return cross(dir, p - base).sign() == 0 && dot(p - base, dir).sign() >= 0;
}

/// Exact membership in the point set of the graph.
inline bool graph_contains(const PlaneCurveGraph& g, const ProjectivePoint& point) {
  const Vec2 p = point.chart();
  for (const auto& v : g.vertices)
    if (v.chart() == p) return true;
  for (const auto& e : g.bounded_edges)
    if (on_segment(p, g.vertices[e.from].chart(), g.vertices[e.to].chart())) return true;
  for (const auto& r : g.rays)
    if (on_ray(p, g.vertices[r.vertex].chart(), r.direction.vec())) return true;
  return false;
}

}  // namespace tropic
