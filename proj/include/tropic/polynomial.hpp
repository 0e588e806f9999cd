#pragma once

// Homogeneous tropical polynomials in x, y, z.

#include "tropic/errors.hpp"
#include "tropic/point.hpp"
#include "tropic/scalar.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace tropic {

struct SupportPoint {
  int i = 0;
  int j = 0;
  int k = 0;

  [[nodiscard]] int degree() const { return i + j + k; }
  friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
  friend auto operator<=>(const SupportPoint&, const SupportPoint&) = default;
};

/// All lattice points of the degree-d simplex, ordered by (i desc, j desc).
inline std::vector<SupportPoint> simplex_points(int d) {
  std::vector<SupportPoint> pts;
  for (int i = d; i >= 0; --i)
    for (int j = d - i; j >= 0; --j) pts.push_back({i, j, d - i - j});
  return pts;
}

class TropicalPolynomial {
public:
  TropicalPolynomial() = default;
  explicit TropicalPolynomial(int degree) : degree_(degree) {
    if (degree < 0) throw PreconditionError("polynomial degree must be non-negative");
  }

  /// Full-support polynomial with coefficients chosen by `coeff`.
  static TropicalPolynomial full(int degree, const std::function<TropicalScalar(const SupportPoint&)>& coeff) {
    TropicalPolynomial f(degree);
    for (const auto& s : simplex_points(degree)) f.set(s, coeff(s));
    return f;
  }

  void set(const SupportPoint& s, TropicalScalar c) {
    if (s.i < 0 || s.j < 0 || s.k < 0 || s.degree() != degree_)
      throw PreconditionError("support point (" + std::to_string(s.i) + "," + std::to_string(s.j) + "," +
                              std::to_string(s.k) + ") does not have degree " + std::to_string(degree_));
    terms_[s] = std::move(c);
  }

  [[nodiscard]] TropicalScalar coefficient(const SupportPoint& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? TropicalScalar::infinity() : it->second;
  }

  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] const std::map<SupportPoint, TropicalScalar>& terms() const { return terms_; }

  /// Terms with finite coefficients; a +inf coefficient deletes the term.
  [[nodiscard]] std::vector<std::pair<SupportPoint, Rational>> finite_terms() const {
    std::vector<std::pair<SupportPoint, Rational>> out;
    for (const auto& [s, c] : terms_)
      if (c.is_finite()) out.emplace_back(s, c.value());
    return out;
  }

  /// Degree-d polynomial in the strict sense: every simplex point is a finite term.
  [[nodiscard]] bool has_full_support() const {
    for (const auto& s : simplex_points(degree_))
      if (coefficient(s).is_infinite()) return false;
    return true;
  }

  /// Values a_s + i x + j y + k z of the finite terms at p.
  [[nodiscard]] std::vector<Rational> term_values(const ProjectivePoint& p) const {
    std::vector<Rational> out;
    for (const auto& [s, c] : finite_terms()) out.push_back(c + Rational(s.i) * p[0] + Rational(s.j) * p[1] + Rational(s.k) * p[2]);
    return out;
  }

  /// Translation of the curve by the vector t (chart coordinates).
  [[nodiscard]] TropicalPolynomial translated(const Vec2& t) const {
    // F(p - t) has coefficient a_s - i t_x - j t_y.
    TropicalPolynomial g(degree_);
    for (const auto& [s, c] : terms_)
      g.set(s, c.is_finite() ? TropicalScalar(c.value() - Rational(s.i) * t.x - Rational(s.j) * t.y) : c);
    return g;
  }

private:
  int degree_ = 0;
  std::map<SupportPoint, TropicalScalar> terms_;
};

/// Minimum of the terms attained at least twice.
inline bool point_on_curve(const TropicalPolynomial& f, const ProjectivePoint& p) {
  auto values = f.term_values(p);
  if (values.empty()) return false;
  const Rational* best = &values.front();
  for (const auto& v : values)
    if (v < *best) best = &v;
  int count = 0;
  for (const auto& v : values) count += (v == *best);
  return count >= 2;
}

/// Conic support in the order x^2, xy, y^2, yz, z^2, xz.
inline const std::array<SupportPoint, 6>& conic_support() {
  static const std::array<SupportPoint, 6> support{
      {{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}, {1, 0, 1}}};
  return support;
}

inline const std::array<std::string, 6>& conic_term_names() {
  static const std::array<std::string, 6> names{"x^2", "xy", "y^2", "yz", "z^2", "xz"};
  return names;
}

inline TropicalPolynomial conic_polynomial(const std::array<TropicalScalar, 6>& a) {
  TropicalPolynomial f(2);
  for (std::size_t t = 0; t < 6; ++t) f.set(conic_support()[t], a[t]);
  return f;
}

/// The line u1 ⊙ x ⊕ u2 ⊙ y ⊕ u3 ⊙ z.
inline TropicalPolynomial line_polynomial(const Triple& u) {
  TropicalPolynomial f(1);
  f.set({1, 0, 0}, u[0]);
  f.set({0, 1, 0}, u[1]);
  f.set({0, 0, 1}, u[2]);
  return f;
}

}  // namespace tropic
