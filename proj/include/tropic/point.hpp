#pragma once

// Points of the tropical projective plane TP^2 = R^3 / R(1,1,1).

#include "tropic/rational.hpp"
#include "tropic/scalar.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace tropic {

/// Affine chart of TP^2 with z = 0.  All planar geometry happens here.
struct Vec2 {
  Rational x;
  Rational y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& a, const Vec2& b) = default;
  friend auto operator<=>(const Vec2& a, const Vec2& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << "(" << v.x << "," << v.y << ")"; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

class ProjectivePoint {
public:
  ProjectivePoint() = default;
  ProjectivePoint(Rational x, Rational y, Rational z) : coords_{std::move(x), std::move(y), std::move(z)} {}
  explicit ProjectivePoint(const Vec2& v) : coords_{v.x, v.y, Rational(0)} {}

  [[nodiscard]] const std::array<Rational, 3>& coords() const { return coords_; }
  [[nodiscard]] const Rational& operator[](std::size_t i) const { return coords_.at(i); }

  /// Representative with last coordinate zero.
  [[nodiscard]] ProjectivePoint normalized() const {
    return {coords_[0] - coords_[2], coords_[1] - coords_[2], Rational(0)};
  }
  [[nodiscard]] Vec2 chart() const { return {coords_[0] - coords_[2], coords_[1] - coords_[2]}; }

  /// Tropical scalar multiplication λ ⊙ p.
  [[nodiscard]] ProjectivePoint scaled(const Rational& lambda) const {
    return {coords_[0] + lambda, coords_[1] + lambda, coords_[2] + lambda};
  }

  /// Equality in TP^2, i.e. modulo the all-ones vector.
  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.chart() == b.chart(); }
  friend auto operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) { return a.chart() <=> b.chart(); }

  friend std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
    return os << "(" << p.coords_[0] << "," << p.coords_[1] << "," << p.coords_[2] << ")";
  }

private:
  std::array<Rational, 3> coords_{};
};

inline ProjectivePoint normalize_tp2(const ProjectivePoint& p) { return p.normalized(); }

/// A triple of tropical scalars, used for both points and line coefficients.
using Triple = std::array<TropicalScalar, 3>;

inline Triple to_triple(const ProjectivePoint& p) { return {p[0], p[1], p[2]}; }

inline ProjectivePoint to_point(const Triple& t) {
  for (const auto& c : t)
    if (c.is_infinite()) throw std::invalid_argument("point coordinates must be finite");
  return {t[0].value(), t[1].value(), t[2].value()};
}

}  // namespace tropic
