#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "symbreak/errors.hpp"

namespace symbreak {

/// Exact rational scalar. All parameters in scope are integers or
/// half-integers, but the type supports arbitrary reduced fractions so that
/// intermediate arithmetic (dimension products, midpoints) stays exact.
/// No decision path in the library ever touches floating point.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  static Rational half(std::int64_t n) { return Rational(n, 2); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_half_integer() const { return den_ == 1 || den_ == 2; }

  /// Largest integer <= *this.
  std::int64_t floor() const {
    if (num_ >= 0) return num_ / den_;
    return -((-num_ + den_ - 1) / den_);
  }
  /// Smallest integer >= *this.
  std::int64_t ceil() const { return -(-*this).floor(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Canonical rendering: "a" for integers, "a/b" otherwise. Bit-stable.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Parses "a" or "a/b" with optional sign. Decimal notation is rejected:
  /// half-integers must be written as fractions.
  static Rational parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  void normalize() {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using RationalVec = std::vector<Rational>;

/// Renders "a,b/2,c" (comma separated, canonical entries).
std::string vec_str(const RationalVec& v);

/// Parses a comma separated rational vector; empty string gives the empty vector.
RationalVec parse_vec(const std::string& text);

bool strictly_decreasing(const RationalVec& v);
bool weakly_decreasing(const RationalVec& v);

/// True iff v - offset is an integer vector, i.e. v lies in offset + Z^k
/// coordinatewise.
bool on_lattice(const RationalVec& v, const Rational& offset);

}  // namespace symbreak
