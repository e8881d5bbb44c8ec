#pragma once

#include <compare>
#include <string>

#include "circlegap/bigint.hpp"

namespace circlegap {

/// Exact rational, canonical form: den > 0 and gcd(num, den) = 1 after every
/// operation.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n, BigInt d);
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == BigInt(1); }
  int sign() const { return num_.sign(); }

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const;
  Rational inverse() const;

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  BigInt floor() const;
  BigInt ceil() const;

  double to_double() const { return num_.to_double() / den_.to_double(); }
  std::string to_string() const;  // "p/q", or "p" when integral

 private:
  BigInt num_, den_;
  void normalize();
};

}  // namespace circlegap
