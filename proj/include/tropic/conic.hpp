#pragma once

// Combinatorial types of tropical conics
//   a1 x^2 ⊕ a2 xy ⊕ a3 y^2 ⊕ a4 yz ⊕ a5 z^2 ⊕ a6 xz.

#include "tropic/errors.hpp"
#include "tropic/scalar.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace tropic {

using ConicCoeffs = std::array<TropicalScalar, 6>;

enum class ConicTag { double_line, union_of_two_lines, case_a, case_b, case_c, case_d, case_e };

inline std::string to_string(ConicTag t) {
  switch (t) {
    case ConicTag::double_line: return "double_line";
    case ConicTag::union_of_two_lines: return "union_of_two_lines";
    case ConicTag::case_a: return "case_a";
    case ConicTag::case_b: return "case_b";
    case ConicTag::case_c: return "case_c";
    case ConicTag::case_d: return "case_d";
    case ConicTag::case_e: return "case_e";
  }
  return "?";
}

/// Variable singled out by the orientation of cases b and c.
enum class ConicAxis { none, x, y, z };

enum class CaseCSubtype { none, negative, positive };

struct ConicClass {
  ConicTag tag = ConicTag::double_line;
  // Case b: the variable whose inequality fails.  Case c: the variable whose
  // inequality holds.
  ConicAxis axis = ConicAxis::none;
  CaseCSubtype subtype = CaseCSubtype::none;
};

namespace detail {

inline std::array<Rational, 6> finite_conic(const ConicCoeffs& a, const char* who) {
  std::array<Rational, 6> v;
  for (std::size_t i = 0; i < 6; ++i) {
    if (a[i].is_infinite()) throw PreconditionError(std::string(who) + ": coefficients must be finite");
    v[i] = a[i].value();
  }
  return v;
}

}  // namespace detail

/// Closed cone of proper conics.
inline bool is_proper_conic(const ConicCoeffs& coeffs) {
  const auto a = detail::finite_conic(coeffs, "is_proper_conic");
  return Rational(2) * a[1] <= a[0] + a[2] && Rational(2) * a[3] <= a[2] + a[4] &&
         Rational(2) * a[5] <= a[0] + a[4];
}

/// The tropical discriminant
///   a1 a3 a5 ⊕ a2 a4 a6 ⊕ a1 a4^2 ⊕ a3 a6^2 ⊕ a5 a2^2
/// attains its minimum twice, i.e. the conic is a union of two lines.
/// Row singularity of the symmetric coefficient matrix is not used: its two
/// 3-cycle permutations always tie, so it fires whenever they are optimal.
inline bool conic_splits_into_lines(const std::array<Rational, 6>& a) {
  const std::array<Rational, 5> terms{a[0] + a[2] + a[4], a[1] + a[3] + a[5], a[0] + Rational(2) * a[3],
                                      a[2] + Rational(2) * a[5], a[4] + Rational(2) * a[1]};
  Rational low = terms[0];
  for (const auto& t : terms) low = min(low, t);
  int count = 0;
  for (const auto& t : terms) count += (t == low);
  return count >= 2;
}

inline ConicClass classify_conic(const ConicCoeffs& coeffs) {
  const auto a = detail::finite_conic(coeffs, "classify_conic");
  const Rational two(2);

  // Rows of the symmetric matrix as points of TP^2.
  const std::array<std::array<Rational, 3>, 3> rows{{{a[0], a[1], a[5]}, {a[1], a[2], a[3]}, {a[5], a[3], a[4]}}};
  auto same = [](const std::array<Rational, 3>& p, const std::array<Rational, 3>& q) {
    return p[0] - q[0] == p[1] - q[1] && p[1] - q[1] == p[2] - q[2];
  };
  if (same(rows[0], rows[1]) && same(rows[1], rows[2])) return {ConicTag::double_line};
  if (conic_splits_into_lines(a)) return {ConicTag::union_of_two_lines};

  const Rational s1 = two * a[1] - a[0] - a[2];  // xy against x^2, y^2
  const Rational s2 = two * a[3] - a[2] - a[4];  // yz against y^2, z^2
  const Rational s3 = two * a[5] - a[0] - a[4];  // xz against x^2, z^2
  const int holds = (s1 >= 0) + (s2 >= 0) + (s3 >= 0);

  if (holds == 3) return {ConicTag::case_a};
  if (holds == 2) {
    ConicClass c{ConicTag::case_b};
    c.axis = s1 < 0 ? ConicAxis::z : (s2 < 0 ? ConicAxis::x : ConicAxis::y);
    return c;
  }
  if (holds == 1) {
    ConicClass c{ConicTag::case_c};
    Rational q;
    if (s3 >= 0) {
      c.axis = ConicAxis::y;
      q = two * a[1] + a[4] - a[0] - two * a[3];
    } else if (s1 >= 0) {
      c.axis = ConicAxis::z;
      q = two * a[5] - a[0] - two * a[3] + a[2];
    } else {
      c.axis = ConicAxis::x;
      q = two * a[1] - a[2] - two * a[5] + a[4];
    }
    // q = 0 makes two discriminant terms tie at the minimum, so that
    // boundary was already classified as a union of two lines.
    if (q.sign() == 0) throw std::logic_error("classify_conic: case c boundary escaped the discriminant test");
    c.subtype = q.sign() < 0 ? CaseCSubtype::negative : CaseCSubtype::positive;
    return c;
  }

  const Rational d1 = a[2] + a[5] - a[1] - a[3];
  const Rational d2 = a[0] + a[3] - a[1] - a[5];
  const Rational d3 = a[1] + a[4] - a[3] - a[5];
  if (d1 > 0 && d2 > 0 && d3 > 0) return {ConicTag::case_d};
  if (d1 < 0 || d2 < 0 || d3 < 0) return {ConicTag::case_e};
  return {ConicTag::union_of_two_lines};
}

}  // namespace tropic
