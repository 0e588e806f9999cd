#pragma once

// Exact rational numbers backed by GMP.  Always kept in canonical form
// (reduced, positive denominator); serialized as "p/q" or "p".

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tropic {

class Rational {
public:
  Rational() : value_(0) {}
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : value_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "p", "p/q" or a finite decimal such as "-1.25".
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("Rational: empty string");
    s = s.substr(first, last - first + 1);
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos)
        throw std::invalid_argument("Rational: cannot mix '.' and '/': " + s);
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::string den = "1" + std::string(s.size() - dot - 1, '0');
      return parse(digits + "/" + den);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(std::move(q));
  }

  [[nodiscard]] std::string str() const { return value_.get_str(10); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  /// Numerator and denominator; throws if they do not fit in 64 bits.
  [[nodiscard]] std::int64_t numerator_i64() const { return to_i64(value_.get_num()); }
  [[nodiscard]] std::int64_t denominator_i64() const { return to_i64(value_.get_den()); }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.sign() == 0) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
  static std::int64_t to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("Rational: component exceeds 64 bits");
    return z.get_si();
  }

  mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace tropic

template <>
struct std::hash<tropic::Rational> {
  std::size_t operator()(const tropic::Rational& r) const noexcept { return std::hash<std::string>{}(r.str()); }
};
