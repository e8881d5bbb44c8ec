#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <string>
#include <string_view>
#include <utility>

namespace circlegap {

/// Arbitrary-precision signed integer, sign-magnitude over 64-bit limbs.
/// Values up to three limbs live inline; everything in this project stays
/// well under that except decimal scaling, which spills to the heap.
class BigInt {
 public:
  BigInt() noexcept : size_(0), neg_(false), heap_(false) {}
  BigInt(long long v);
  BigInt(long v) : BigInt(static_cast<long long>(v)) {}
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}
  BigInt(unsigned long long v);
  explicit BigInt(std::string_view decimal);

  BigInt(const BigInt& o);
  BigInt(BigInt&& o) noexcept;
  BigInt& operator=(const BigInt& o);
  BigInt& operator=(BigInt&& o) noexcept;
  ~BigInt() { release(); }

  bool is_zero() const { return size_ == 0; }
  bool is_negative() const { return neg_; }
  int sign() const { return size_ == 0 ? 0 : (neg_ ? -1 : 1); }
  bool is_even() const { return size_ == 0 || (limbs()[0] & 1) == 0; }

  friend BigInt operator+(const BigInt& x, const BigInt& y);
  friend BigInt operator-(const BigInt& x, const BigInt& y);
  friend BigInt operator*(const BigInt& x, const BigInt& y);
  /// Truncated toward zero, like built-in integer division.
  friend BigInt operator/(const BigInt& x, const BigInt& y);
  friend BigInt operator%(const BigInt& x, const BigInt& y);
  static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);

  BigInt operator-() const;
  BigInt abs() const;

  BigInt& operator+=(const BigInt& y) { return *this = *this + y; }
  BigInt& operator-=(const BigInt& y) { return *this = *this - y; }
  BigInt& operator*=(const BigInt& y) { return *this = *this * y; }
  BigInt& operator/=(const BigInt& y) { return *this = *this / y; }

  friend bool operator==(const BigInt& x, const BigInt& y);
  friend std::strong_ordering operator<=>(const BigInt& x, const BigInt& y);

  std::string to_string() const;
  double to_double() const;
  /// Requires the value to fit; asserts otherwise.
  long long to_ll() const;
  bool fits_ll() const;

  static BigInt pow10(unsigned k);

  size_t limb_count() const { return size_; }
  size_t bit_length() const;

 private:
  static constexpr uint32_t kInline = 3;

  uint32_t size_;
  bool neg_;
  bool heap_;
  union {
    std::array<uint64_t, kInline> small_;
    struct {
      uint64_t* p;
      uint32_t cap;
    } big_;
  };

  const uint64_t* limbs() const { return heap_ ? big_.p : small_.data(); }
  uint64_t* limbs() { return heap_ ? big_.p : small_.data(); }
  void release();
  void reserve(uint32_t n);  // keeps contents up to size_
  void set_size(uint32_t n) { size_ = n; }
  void trim();

  static int cmp_mag(const BigInt& x, const BigInt& y);
  static void add_mag(const BigInt& x, const BigInt& y, BigInt& out);
  // requires |x| >= |y|
  static void sub_mag(const BigInt& x, const BigInt& y, BigInt& out);
  static void mul_mag(const BigInt& x, const BigInt& y, BigInt& out);
  static void divmod_mag(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r);

  friend struct BigIntTestPeer;
};

BigInt gcd(BigInt a, BigInt b);

/// floor(sqrt(n)) for n >= 0, Newton iteration with a bit-length seed.
BigInt isqrt(const BigInt& n);

/// Fibonacci numbers with F(0) = 0, F(1) = 1, extended to negative index by
/// F(-n) = (-1)^(n+1) F(n). Nonnegative values are cached; the cache is
/// populated once under a mutex and read lock-free afterwards.
const BigInt& fibonacci(long n);
BigInt fibonacci_value(long n);  // copy, handles negative n

}  // namespace circlegap
