#include "circlegap/rational.hpp"

#include <stdexcept>

namespace circlegap {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.is_negative()) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = BigInt(1);
    return;
  }
  BigInt g = gcd(num_, den_);
  if (!(g == BigInt(1))) {
    num_ /= g;
    den_ /= g;
  }
}

Rational operator+(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return Rational(x.num_ * y.num_, x.den_ * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(x.num_ * y.den_, x.den_ * y.num_);
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return x.num_ * y.den_ <=> y.num_ * x.den_;
}

BigInt Rational::floor() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (r.is_negative()) q -= BigInt(1);
  return q;
}

BigInt Rational::ceil() const {
  BigInt q, r;
  BigInt::divmod(num_, den_, q, r);
  if (r.sign() > 0) q += BigInt(1);
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

}  // namespace circlegap
