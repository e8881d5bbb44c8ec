#include "circlegap/quadsurd.hpp"

#include <cmath>
#include <stdexcept>

namespace circlegap {

QuadSurd::QuadSurd(BigInt a, BigInt b, BigInt c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (c_.is_zero()) throw std::domain_error("QuadSurd: zero denominator");
  normalize();
}

void QuadSurd::normalize() {
  if (c_.is_negative()) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (a_.is_zero() && b_.is_zero()) {
    c_ = BigInt(1);
    return;
  }
  BigInt g = gcd(gcd(a_, b_), c_);
  if (!(g == BigInt(1))) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

Rational QuadSurd::to_rational() const {
  if (!is_rational()) throw std::domain_error("QuadSurd: irrational value");
  return Rational(a_, c_);
}

int sign_with_sqrt5(const BigInt& a, const BigInt& b) {
  int sa = a.sign(), sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  BigInt a2 = a * a;
  BigInt b25 = b * b * BigInt(5);
  auto c = a2 <=> b25;
  if (c == std::strong_ordering::equal) return 0;  // unreachable: 5 is not a square
  bool a_dominates = c == std::strong_ordering::greater;
  return a_dominates ? sa : sb;
}

int QuadSurd::sign() const { return sign_with_sqrt5(a_, b_); }

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  return QuadSurd(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) {
  return QuadSurd(x.a_ * y.c_ - y.a_ * x.c_, x.b_ * y.c_ - y.b_ * x.c_, x.c_ * y.c_);
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  return QuadSurd(x.a_ * y.a_ + BigInt(5) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_,
                  x.c_ * y.c_);
}

QuadSurd QuadSurd::inverse() const {
  if (is_zero()) throw std::domain_error("QuadSurd: division by zero");
  // 1/((a+b*s)/c) = c(a-b*s)/(a^2-5b^2)
  BigInt norm = a_ * a_ - BigInt(5) * b_ * b_;
  return QuadSurd(c_ * a_, -(c_ * b_), norm);
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) { return x * y.inverse(); }

QuadSurd QuadSurd::operator-() const {
  QuadSurd r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadSurd QuadSurd::conjugate() const {
  QuadSurd r = *this;
  r.b_ = -r.b_;
  return r;
}

std::strong_ordering operator<=>(const QuadSurd& x, const QuadSurd& y) {
  // sign of x - y; denominators are positive
  BigInt a = x.a_ * y.c_ - y.a_ * x.c_;
  BigInt b = x.b_ * y.c_ - y.b_ * x.c_;
  int s = sign_with_sqrt5(a, b);
  return s < 0    ? std::strong_ordering::less
         : s == 0 ? std::strong_ordering::equal
                  : std::strong_ordering::greater;
}

double QuadSurd::to_double() const {
  constexpr double kSqrt5 = 2.23606797749978969640;
  return (a_.to_double() + b_.to_double() * kSqrt5) / c_.to_double();
}

BigInt QuadSurd::floor() const {
  if (is_rational()) return Rational(a_, c_).floor();
  // float64 first guess, exact +-1 adjustment; bail out to the integer-sqrt
  // route when the guess is too coarse (huge scaled values, cancellation)
  double guess = std::floor(to_double());
  if (std::isfinite(guess) && std::fabs(guess) < 9e15) {
    BigInt q(static_cast<long long>(guess));
    int steps = 0;
    bool ok = true;
    while (ok && *this < QuadSurd(q)) {
      q -= BigInt(1);
      ok = ++steps <= 4;
    }
    while (ok && !(*this < QuadSurd(q + BigInt(1)))) {
      q += BigInt(1);
      ok = ++steps <= 4;
    }
    if (ok) return q;
  }
  // floor((a + b*sqrt5)/c) = floordiv(a + floor(b*sqrt5), c); b*sqrt5 is
  // irrational, so the fractional part never tips the division
  BigInt five_b2 = BigInt(5) * b_ * b_;
  BigInt fb = b_.sign() > 0 ? isqrt(five_b2) : -(isqrt(five_b2) + BigInt(1));
  BigInt q, r;
  BigInt::divmod(a_ + fb, c_, q, r);
  if (r.is_negative()) q -= BigInt(1);
  return q;
}

BigInt QuadSurd::ceil() const {
  if (is_rational()) return Rational(a_, c_).ceil();
  return floor() + BigInt(1);  // irrational: never an integer
}

QuadSurd QuadSurd::frac() const { return *this - QuadSurd(floor()); }

std::string QuadSurd::decimal(unsigned digits) const {
  // round-half-even at the last place, on |x| scaled by 10^digits
  bool neg = sign() < 0;
  QuadSurd mag = neg ? -*this : *this;
  BigInt scale = BigInt::pow10(digits);
  QuadSurd scaled = mag * QuadSurd(scale);
  BigInt q = scaled.floor();
  BigInt n;  // rounded integer in units of 10^-digits
  if (scaled.is_rational()) {
    Rational rem = scaled.to_rational() - Rational(q);
    Rational half(1, 2);
    auto cmp = rem <=> half;
    if (cmp == std::strong_ordering::greater)
      n = q + BigInt(1);
    else if (cmp == std::strong_ordering::less)
      n = q;
    else
      n = q.is_even() ? q : q + BigInt(1);
  } else {
    // irrational: fractional part is never exactly 1/2
    QuadSurd rem = scaled - QuadSurd(q);
    QuadSurd half(BigInt(1), BigInt(0), BigInt(2));
    n = rem < half ? q : q + BigInt(1);
  }
  std::string s = n.to_string();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  std::string out;
  if (neg && !(n.is_zero())) out.push_back('-');
  if (digits == 0) {
    out += s;
  } else {
    out += s.substr(0, s.size() - digits);
    out.push_back('.');
    out += s.substr(s.size() - digits);
  }
  return out;
}

std::string QuadSurd::json() const {
  return "{\"a\": \"" + a_.to_string() + "\", \"b\": \"" + b_.to_string() +
         "\", \"c\": \"" + c_.to_string() + "\"}";
}

std::string QuadSurd::to_string() const {
  if (is_rational()) return to_rational().to_string();
  std::string num;
  if (!a_.is_zero()) num = a_.to_string();
  if (b_ == BigInt(1))
    num += num.empty() ? "sqrt5" : "+sqrt5";
  else if (b_ == BigInt(-1))
    num += "-sqrt5";
  else if (b_.is_negative())
    num += b_.to_string() + "*sqrt5";
  else
    num += (num.empty() ? "" : "+") + b_.to_string() + "*sqrt5";
  if (c_ == BigInt(1)) return num;
  return "(" + num + ")/" + c_.to_string();
}

}  // namespace circlegap
