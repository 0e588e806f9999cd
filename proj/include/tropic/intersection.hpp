#pragma once

// Transversal and stable intersections of plane tropical curves.  The
// stable intersection translates the second curve by ε·v with ε a formal
// infinitesimal; crossings are solved exactly over EpsRational and then
// replaced by their standard parts.

#include "tropic/curve.hpp"
#include "tropic/eps.hpp"
#include "tropic/errors.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tropic {

struct IntersectionPoint {
  ProjectivePoint location;
  std::int64_t multiplicity = 0;

  friend bool operator==(const IntersectionPoint& a, const IntersectionPoint& b) {
    return a.location == b.location && a.multiplicity == b.multiplicity;
  }
};

struct StableIntersection {
  std::vector<IntersectionPoint> points;  // sorted by location, locations distinct
  std::int64_t total = 0;
  Direction direction;                    // perturbation direction used
};

inline bool same_points(const StableIntersection& a, const StableIntersection& b) {
  return a.points == b.points && a.total == b.total;
}

/// An edge or ray of a curve as base + s·dir, s in [0,1] or [0,∞).
struct CurvePiece {
  Vec2 base;
  Vec2 dir;
  bool bounded = false;
  Direction primitive;
  std::int64_t multiplicity = 1;
};

inline std::vector<CurvePiece> curve_pieces(const PlaneCurveGraph& g) {
  std::vector<CurvePiece> out;
  for (const auto& e : g.bounded_edges) {
    const Vec2 a = g.vertices[e.from].chart();
    const Vec2 b = g.vertices[e.to].chart();
    out.push_back({a, b - a, true, primitive_direction(b - a).first, e.multiplicity});
  }
  for (const auto& r : g.rays)
    out.push_back({g.vertices[r.vertex].chart(), r.direction.vec(), false, r.direction, r.multiplicity});
  return out;
}

/// |det| of the 3x3 matrix with the two primitive directions (lifted with
/// z = 0) and the all-ones row, times both multiplicities.
inline std::int64_t crossing_multiplicity(const CurvePiece& c, const CurvePiece& d) {
  const std::int64_t det = c.primitive.dx * d.primitive.dy - c.primitive.dy * d.primitive.dx;
  return (det < 0 ? -det : det) * c.multiplicity * d.multiplicity;
}

namespace detail {

enum class Crossing { none, interior, touching };

/// Solves base_c + s·dir_c = base_d + offset + t·dir_d for non-parallel
/// pieces.  The offset may be infinitesimal.
template <typename Scalar>
inline Crossing classify_crossing(const CurvePiece& c, const CurvePiece& d, const Scalar& ox, const Scalar& oy,
                                  Scalar& s_out) {
  const Rational det = cross(c.dir, d.dir);
  // rhs = base_d + offset - base_c
  const Scalar rx = Scalar(d.base.x - c.base.x) + ox;
  const Scalar ry = Scalar(d.base.y - c.base.y) + oy;
  // s = cross(rhs, dir_d) / det,  t = cross(rhs, dir_c) / det
  const Scalar s = (rx * d.dir.y - ry * d.dir.x) / det;
  const Scalar t = (rx * c.dir.y - ry * c.dir.x) / det;
  auto position = [](const Scalar& u, bool bounded) {
    const Scalar zero(Rational(0)), one(Rational(1));
    if (u < zero || (bounded && one < u)) return Crossing::none;
    if (u == zero || (bounded && u == one)) return Crossing::touching;
    return Crossing::interior;
  };
  const Crossing ps = position(s, c.bounded);
  const Crossing pt = position(t, d.bounded);
  s_out = s;
  if (ps == Crossing::none || pt == Crossing::none) return Crossing::none;
  if (ps == Crossing::touching || pt == Crossing::touching) return Crossing::touching;
  return Crossing::interior;
}

inline StableIntersection collect(std::map<Vec2, std::int64_t>& hits, Direction dir) {
  StableIntersection out;
  out.direction = dir;
  for (const auto& [p, m] : hits) {
    out.points.push_back({ProjectivePoint(p), m});
    out.total += m;
  }
  return out;
}

inline bool overlaps(const CurvePiece& c, const CurvePiece& d) {
  if (cross(c.dir, d.dir).sign() != 0 || cross(c.dir, d.base - c.base).sign() != 0) return false;
  // Collinear: compare parameter intervals along c.dir.
  const Rational len = dot(c.dir, c.dir);
  auto param = [&](const Vec2& p) { return dot(p - c.base, c.dir) / len; };
  const Rational c_lo(0);
  const std::optional<Rational> c_hi = c.bounded ? std::optional<Rational>(Rational(1)) : std::nullopt;
  const Rational d0 = param(d.base);
  const Rational step = dot(d.dir, c.dir) / len;
  std::optional<Rational> d_lo, d_hi;
  if (d.bounded) {
    d_lo = min(d0, d0 + step);
    d_hi = max(d0, d0 + step);
  } else if (step.sign() > 0) {
    d_lo = d0;
  } else {
    d_hi = d0;
  }
  const Rational lo = d_lo ? max(c_lo, *d_lo) : c_lo;
  std::optional<Rational> hi = c_hi;
  if (d_hi) hi = hi ? min(*hi, *d_hi) : *d_hi;
  return !hi || lo <= *hi;
}

}  // namespace detail

struct TransversalResult {
  bool transversal = false;
  StableIntersection value;
  std::string reason;  // why the curves are not transversal
};

/// Succeeds iff every meeting point of the two point sets lies in the
/// relative interior of an edge of each curve and the pieces cross.
inline TransversalResult transversal_intersect(const PlaneCurveGraph& c, const PlaneCurveGraph& d) {
  TransversalResult res;
  std::map<Vec2, std::int64_t> hits;
  const auto pc = curve_pieces(c);
  const auto pd = curve_pieces(d);
  for (const auto& a : pc)
    for (const auto& b : pd) {
      if (cross(a.dir, b.dir).sign() == 0) {
        if (detail::overlaps(a, b)) {
          res.reason = "overlapping parallel pieces";
          return res;
        }
        continue;
      }
      Rational s;
      const auto kind = detail::classify_crossing<Rational>(a, b, Rational(0), Rational(0), s);
      if (kind == detail::Crossing::touching) {
        res.reason = "meeting point at a vertex";
        return res;
      }
      if (kind == detail::Crossing::interior) hits[a.base + s * a.dir] += crossing_multiplicity(a, b);
    }
  res.transversal = true;
  res.value = detail::collect(hits, Direction{0, 0});
  return res;
}

/// Stable intersection with D translated by ε·v.  Returns nothing when v is
/// not generic for this pair (parallel to a piece, or a crossing still
/// touches a vertex).
inline std::optional<StableIntersection> stable_intersect_along(const PlaneCurveGraph& c, const PlaneCurveGraph& d,
                                                                Direction v) {
  const auto pc = curve_pieces(c);
  const auto pd = curve_pieces(d);
  const Vec2 vv = v.vec();
  for (const auto* pieces : {&pc, &pd})
    for (const auto& p : *pieces)
      if (cross(p.dir, vv).sign() == 0) return std::nullopt;
  const EpsRational ox(Rational(0), vv.x), oy(Rational(0), vv.y);
  std::map<Vec2, std::int64_t> hits;
  for (const auto& a : pc)
    for (const auto& b : pd) {
      // Parallel pieces are ε-separated after a transverse translation.
      if (cross(a.dir, b.dir).sign() == 0) continue;
      EpsRational s;
      const auto kind = detail::classify_crossing<EpsRational>(a, b, ox, oy, s);
      if (kind == detail::Crossing::touching) return std::nullopt;
      if (kind == detail::Crossing::interior) hits[a.base + s.standard * a.dir] += crossing_multiplicity(a, b);
    }
  return detail::collect(hits, v);
}

/// Perturbation directions (1, q) for the primes q.
inline const std::vector<Direction>& perturbation_directions() {
  static const std::vector<Direction> dirs = [] {
    std::vector<Direction> out;
    for (std::int64_t q = 2; out.size() < 40; ++q) {
      bool prime = true;
      for (std::int64_t f = 2; f * f <= q; ++f) prime = prime && q % f != 0;
      if (prime) out.push_back({1, q});
    }
    return out;
  }();
  return dirs;
}

/// Stable intersection; recomputed along a second generic direction and the
/// two results must agree.
inline StableIntersection stable_intersect(const PlaneCurveGraph& c, const PlaneCurveGraph& d) {
  std::vector<StableIntersection> found;
  for (const auto& v : perturbation_directions()) {
    if (auto r = stable_intersect_along(c, d, v)) found.push_back(std::move(*r));
    if (found.size() == 2) break;
  }
  if (found.size() < 2) throw std::logic_error("stable_intersect: no generic perturbation direction found");
  if (!same_points(found[0], found[1])) {
    std::ostringstream msg;
    msg << "stable_intersect: directions (" << found[0].direction.dx << "," << found[0].direction.dy << ") and ("
        << found[1].direction.dx << "," << found[1].direction.dy << ") disagree";
    throw std::logic_error(msg.str());
  }
  return found[0];
}

inline StableIntersection stable_intersect(const TropicalPolynomial& c, const TropicalPolynomial& d) {
  if (c.finite_terms().empty() || d.finite_terms().empty())
    throw PreconditionError("stable_intersect: polynomials need a finite coefficient");
  return stable_intersect(build_curve(c), build_curve(d));
}

inline bool bezout_check(const TropicalPolynomial& c, const TropicalPolynomial& d) {
  if (!c.has_full_support() || !d.has_full_support())
    throw PreconditionError("bezout_check: both polynomials need full support");
  return stable_intersect(c, d).total == static_cast<std::int64_t>(c.degree()) * d.degree();
}

/// A connected piece of the set-theoretic intersection: a point, segment or
/// ray.  Reported as geometry only.
struct OverlapPiece {
  enum class Kind { point, segment, ray } kind = Kind::point;
  Vec2 start;
  Vec2 end;          // segment end
  Direction direction;  // ray direction
};

/// Set-theoretic intersection: one entry per overlapping pair of parallel
/// pieces, plus the isolated meeting points.  No multiplicities.
inline std::vector<OverlapPiece> geometric_intersection(const PlaneCurveGraph& c, const PlaneCurveGraph& d) {
  std::vector<OverlapPiece> out;
  std::set<Vec2> points;
  const auto pc = curve_pieces(c);
  const auto pd = curve_pieces(d);
  for (const auto& a : pc)
    for (const auto& b : pd) {
      if (cross(a.dir, b.dir).sign() != 0) {
        Rational s;
        if (detail::classify_crossing<Rational>(a, b, Rational(0), Rational(0), s) != detail::Crossing::none)
          points.insert(a.base + s * a.dir);
        continue;
      }
      if (!detail::overlaps(a, b)) continue;
      // Parameter interval along a.
      const Rational len = dot(a.dir, a.dir);
      auto param = [&](const Vec2& p) { return dot(p - a.base, a.dir) / len; };
      const Rational d0 = param(b.base), step = dot(b.dir, a.dir) / len;
      std::optional<Rational> lo = Rational(0), hi;
      if (a.bounded) hi = Rational(1);
      if (b.bounded) {
        lo = max(*lo, min(d0, d0 + step));
        hi = hi ? min(*hi, max(d0, d0 + step)) : max(d0, d0 + step);
      } else if (step.sign() > 0) {
        lo = max(*lo, d0);
      } else {
        hi = hi ? min(*hi, d0) : d0;
      }
      OverlapPiece piece;
      piece.start = a.base + *lo * a.dir;
      if (!hi) {
        piece.kind = OverlapPiece::Kind::ray;
        piece.direction = a.primitive;
      } else if (*hi == *lo) {
        points.insert(piece.start);
        continue;
      } else {
        piece.kind = OverlapPiece::Kind::segment;
        piece.end = a.base + *hi * a.dir;
      }
      out.push_back(piece);
    }
  // Drop points lying on a reported overlap.
  for (const auto& p : points) {
    bool covered = false;
    for (const auto& o : out)
      covered = covered || (o.kind == OverlapPiece::Kind::segment ? on_segment(p, o.start, o.end)
                                                                   : on_ray(p, o.start, o.direction.vec()));
    if (!covered) out.push_back({OverlapPiece::Kind::point, p, p, {}});
  }
  return out;
}

}  // namespace tropic
