#pragma once

// Elements of the min-plus semiring Q ∪ {+inf}.

#include "tropic/rational.hpp"

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropic {

class TropicalScalar {
public:
  /// Default is +inf, the neutral element of tropical addition.
  TropicalScalar() = default;
  TropicalScalar(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  TropicalScalar(long v) : value_(Rational(v)) {}       // NOLINT
  TropicalScalar(int v) : value_(Rational(v)) {}        // NOLINT

  static TropicalScalar infinity() { return TropicalScalar(); }

  /// Accepts the serialized forms "inf", "+inf", "p/q", "p".
  static TropicalScalar parse(std::string_view text) {
    if (text == "inf" || text == "+inf" || text == "Infinity") return infinity();
    return TropicalScalar(Rational::parse(text));
  }

  [[nodiscard]] bool is_finite() const { return value_.has_value(); }
  [[nodiscard]] bool is_infinite() const { return !value_.has_value(); }

  [[nodiscard]] const Rational& value() const {
    if (!value_) throw std::logic_error("TropicalScalar: +inf has no finite value");
    return *value_;
  }

  [[nodiscard]] std::string str() const { return value_ ? value_->str() : "inf"; }

  friend bool operator==(const TropicalScalar& a, const TropicalScalar& b) = default;
  /// +inf compares greater than every finite value.
  friend std::strong_ordering operator<=>(const TropicalScalar& a, const TropicalScalar& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
      return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
  }

  friend std::ostream& operator<<(std::ostream& os, const TropicalScalar& s) { return os << s.str(); }

private:
  std::optional<Rational> value_;
};

/// Tropical addition: min.
inline TropicalScalar trop_add(const TropicalScalar& a, const TropicalScalar& b) { return b < a ? b : a; }

/// Tropical multiplication: classical sum, +inf absorbing.
inline TropicalScalar trop_mul(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_infinite() || b.is_infinite()) return TropicalScalar::infinity();
  return TropicalScalar(a.value() + b.value());
}

}  // namespace tropic
