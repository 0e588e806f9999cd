#pragma once

// Lines in TP^3 from the orders of their six Plücker coordinates.

#include "tropic/cramer.hpp"
#include "tropic/errors.hpp"
#include "tropic/scalar.hpp"

#include <array>
#include <string>

namespace tropic {

struct PlueckerTP3 {
  Rational a12, a13, a14, a23, a24, a34;
};

enum class TP3Case { split_12_34, split_13_24, split_14_23, degenerate };

inline std::string to_string(TP3Case c) {
  switch (c) {
    case TP3Case::split_12_34: return "[12,34]";
    case TP3Case::split_13_24: return "[13,24]";
    case TP3Case::split_14_23: return "[14,23]";
    case TP3Case::degenerate: return "degenerate";
  }
  return "?";
}

using PointTP3 = std::array<Rational, 4>;

struct TP3Line {
  TP3Case case_tag = TP3Case::degenerate;
  PointTP3 endpoint_1{};
  PointTP3 endpoint_2{};
};

inline TP3Line tp3_line(const PlueckerTP3& p) {
  const Rational s_12_34 = p.a12 + p.a34;
  const Rational s_13_24 = p.a13 + p.a24;
  const Rational s_14_23 = p.a14 + p.a23;
  const Rational low = min(min(s_12_34, s_13_24), s_14_23);
  const int attained = (s_12_34 == low) + (s_13_24 == low) + (s_14_23 == low);
  if (attained < 2)
    throw PreconditionError("tp3_line: tropical Plücker relation violated (min of a12+a34, a13+a24, a14+a23 is "
                            "attained once)");

  TP3Line line;
  // The pairing whose sum is not among the tied minima names the case.
  // When all three tie, the [12,34] endpoint formulas coincide projectively.
  if (attained == 3 || s_12_34 > low) {
    line.case_tag = attained == 3 ? TP3Case::degenerate : TP3Case::split_12_34;
    line.endpoint_1 = {p.a23 + p.a34, p.a13 + p.a34, p.a14 + p.a23, p.a13 + p.a23};
    line.endpoint_2 = {p.a13 + p.a24, p.a13 + p.a14, p.a12 + p.a14, p.a12 + p.a13};
    if (attained == 3) line.endpoint_2 = line.endpoint_1;
  } else if (s_13_24 > low) {
    line.case_tag = TP3Case::split_13_24;
    // Third coordinate is the tied sum a12 + a34; the strict sum a13 + a24
    // there would violate the second circuit.
    line.endpoint_1 = {p.a23 + p.a34, p.a13 + p.a34, p.a12 + p.a34, p.a13 + p.a23};
    line.endpoint_2 = {p.a24 + p.a34, p.a14 + p.a34, p.a14 + p.a24, p.a12 + p.a34};
  } else {
    line.case_tag = TP3Case::split_14_23;
    // Fourth coordinate is the tied sum a12 + a34, not the strict a14 + a23.
    line.endpoint_1 = {p.a24 + p.a34, p.a14 + p.a34, p.a14 + p.a24, p.a12 + p.a34};
    line.endpoint_2 = {p.a23 + p.a34, p.a13 + p.a34, p.a12 + p.a34, p.a13 + p.a23};
  }
  return line;
}

/// Membership in the four circuit hyperplanes of the line's tropical basis.
inline bool on_tp3_line(const PlueckerTP3& p, const PointTP3& x) {
  auto twice = [](const Rational& a, const Rational& b, const Rational& c) {
    return min_attained_twice({a, b, c});
  };
  return twice(p.a12 + x[1], p.a13 + x[2], p.a14 + x[3]) && twice(p.a12 + x[0], p.a23 + x[2], p.a24 + x[3]) &&
         twice(p.a13 + x[0], p.a23 + x[1], p.a34 + x[3]) && twice(p.a14 + x[0], p.a24 + x[1], p.a34 + x[2]);
}

}  // namespace tropic
