#pragma once

// Numbers of the form s + i·ε with ε a positive infinitesimal, truncated at
// first order.  Ordered lexicographically (standard part first).

#include "tropic/rational.hpp"

#include <compare>
#include <ostream>

namespace tropic {

struct EpsRational {
  Rational standard;
  Rational infinitesimal;

  EpsRational() = default;
  EpsRational(Rational s) : standard(std::move(s)) {}  // NOLINT(google-explicit-constructor)
  EpsRational(Rational s, Rational i) : standard(std::move(s)), infinitesimal(std::move(i)) {}

  static EpsRational epsilon() { return {Rational(0), Rational(1)}; }

  [[nodiscard]] int sign() const { return standard.sign() != 0 ? standard.sign() : infinitesimal.sign(); }
  [[nodiscard]] bool is_zero() const { return standard.sign() == 0 && infinitesimal.sign() == 0; }

  friend EpsRational operator+(const EpsRational& a, const EpsRational& b) {
    return {a.standard + b.standard, a.infinitesimal + b.infinitesimal};
  }
  friend EpsRational operator-(const EpsRational& a, const EpsRational& b) {
    return {a.standard - b.standard, a.infinitesimal - b.infinitesimal};
  }
  EpsRational operator-() const { return {-standard, -infinitesimal}; }

  friend EpsRational operator*(const EpsRational& a, const Rational& r) {
    return {a.standard * r, a.infinitesimal * r};
  }
  friend EpsRational operator*(const Rational& r, const EpsRational& a) { return a * r; }
  friend EpsRational operator/(const EpsRational& a, const Rational& r) {
    return {a.standard / r, a.infinitesimal / r};
  }
  /// First-order product; the ε² term is dropped.
  friend EpsRational operator*(const EpsRational& a, const EpsRational& b) {
    return {a.standard * b.standard, a.standard * b.infinitesimal + a.infinitesimal * b.standard};
  }

  friend bool operator==(const EpsRational& a, const EpsRational& b) = default;
  friend std::strong_ordering operator<=>(const EpsRational& a, const EpsRational& b) {
    if (auto c = a.standard <=> b.standard; c != 0) return c;
    return a.infinitesimal <=> b.infinitesimal;
  }

  friend std::ostream& operator<<(std::ostream& os, const EpsRational& e) {
    return os << e.standard << (e.infinitesimal.sign() < 0 ? "" : "+") << e.infinitesimal << "e";
  }
};

inline EpsRational min(const EpsRational& a, const EpsRational& b) { return b < a ? b : a; }

}  // namespace tropic
