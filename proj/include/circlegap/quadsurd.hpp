#pragma once

#include <compare>
#include <string>

#include "circlegap/bigint.hpp"
#include "circlegap/rational.hpp"

namespace circlegap {

/// Exact sign of a + b*sqrt5 by integer sign analysis; the mixed-sign cases
/// compare a^2 against 5 b^2.
int sign_with_sqrt5(const BigInt& a, const BigInt& b);

/// Exact element (a + b*sqrt5) / c of the field Q(sqrt5), kept canonical:
/// c > 0 and gcd(a, b, c) = 1. Equality of field values is equality of the
/// canonical triples, and the ordering is the real-embedding order, decided
/// by exact integer sign analysis (never by floating point alone).
class QuadSurd {
 public:
  QuadSurd() : a_(0), b_(0), c_(1) {}
  QuadSurd(long long n) : a_(n), b_(0), c_(1) {}
  QuadSurd(BigInt n) : a_(std::move(n)), b_(0), c_(1) {}
  QuadSurd(const Rational& r) : a_(r.num()), b_(0), c_(r.den()) {}
  QuadSurd(BigInt a, BigInt b, BigInt c);

  static QuadSurd sqrt5() { return QuadSurd(BigInt(0), BigInt(1), BigInt(1)); }
  /// phi = (1 + sqrt5)/2, the golden ratio.
  static QuadSurd phi() { return QuadSurd(BigInt(1), BigInt(1), BigInt(2)); }
  /// rho = 1 + 2/sqrt5 = (5 + 2*sqrt5)/5, the golden discrepancy bound.
  static QuadSurd rho() { return QuadSurd(BigInt(5), BigInt(2), BigInt(5)); }

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  Rational to_rational() const;  // requires is_rational()
  int sign() const;

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
  QuadSurd operator-() const;
  QuadSurd inverse() const;
  /// Algebraic conjugate (a - b*sqrt5)/c.
  QuadSurd conjugate() const;

  QuadSurd& operator+=(const QuadSurd& y) { return *this = *this + y; }
  QuadSurd& operator-=(const QuadSurd& y) { return *this = *this - y; }
  QuadSurd& operator*=(const QuadSurd& y) { return *this = *this * y; }
  QuadSurd& operator/=(const QuadSurd& y) { return *this = *this / y; }

  friend bool operator==(const QuadSurd& x, const QuadSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y);

  /// Exact floor/ceil: float64 first guess, then +-1 adjustment steps with
  /// exact comparisons.
  BigInt floor() const;
  BigInt ceil() const;
  /// x - floor(x), in [0, 1).
  QuadSurd frac() const;

  double to_double() const;

  /// Fixed-point decimal rendering with `digits` places after the point,
  /// round-half-even, computed from exact integer arithmetic. (Ties can only
  /// occur for rational values; sqrt5 multiples never land on a half.)
  std::string decimal(unsigned digits) const;

  /// Canonical triple as decimal strings: {"a": "...", "b": "...", "c": "..."}.
  std::string json() const;
  std::string to_string() const;  // "(a+b*sqrt5)/c" human form

 private:
  BigInt a_, b_, c_;
  void normalize();
};

}  // namespace circlegap
