#include "circlegap/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace circlegap {

using u64 = uint64_t;
using u128 = unsigned __int128;

void BigInt::release() {
  if (heap_) {
    delete[] big_.p;
    heap_ = false;
  }
}

void BigInt::reserve(uint32_t n) {
  if (n <= kInline && !heap_) return;
  uint32_t cap = heap_ ? big_.cap : kInline;
  if (n <= cap) return;
  uint32_t newcap = std::max(n, cap * 2);
  u64* p = new u64[newcap];
  std::memcpy(p, limbs(), size_ * sizeof(u64));
  release();
  big_.p = p;
  big_.cap = newcap;
  heap_ = true;
}

void BigInt::trim() {
  while (size_ > 0 && limbs()[size_ - 1] == 0) --size_;
  if (size_ == 0) neg_ = false;
}

BigInt::BigInt(long long v) : size_(0), neg_(false), heap_(false) {
  if (v == 0) return;
  neg_ = v < 0;
  u64 m = neg_ ? (~static_cast<u64>(v) + 1) : static_cast<u64>(v);
  small_[0] = m;
  size_ = 1;
}

BigInt::BigInt(unsigned long long v) : size_(0), neg_(false), heap_(false) {
  if (v == 0) return;
  small_[0] = v;
  size_ = 1;
}

BigInt::BigInt(const BigInt& o) : size_(o.size_), neg_(o.neg_), heap_(false) {
  if (o.size_ <= kInline) {
    std::memcpy(small_.data(), o.limbs(), o.size_ * sizeof(u64));
  } else {
    big_.p = new u64[o.size_];
    big_.cap = o.size_;
    heap_ = true;
    std::memcpy(big_.p, o.limbs(), o.size_ * sizeof(u64));
  }
}

BigInt::BigInt(BigInt&& o) noexcept : size_(o.size_), neg_(o.neg_), heap_(o.heap_) {
  if (o.heap_) {
    big_ = o.big_;
    o.heap_ = false;
    o.size_ = 0;
    o.neg_ = false;
  } else {
    small_ = o.small_;
  }
}

BigInt& BigInt::operator=(const BigInt& o) {
  if (this == &o) return *this;
  if (o.size_ <= kInline) {
    release();
    std::memcpy(small_.data(), o.limbs(), o.size_ * sizeof(u64));
  } else {
    reserve(o.size_);
    std::memcpy(limbs(), o.limbs(), o.size_ * sizeof(u64));
  }
  size_ = o.size_;
  neg_ = o.neg_;
  return *this;
}

BigInt& BigInt::operator=(BigInt&& o) noexcept {
  if (this == &o) return *this;
  release();
  size_ = o.size_;
  neg_ = o.neg_;
  heap_ = o.heap_;
  if (o.heap_) {
    big_ = o.big_;
    o.heap_ = false;
    o.size_ = 0;
    o.neg_ = false;
  } else {
    small_ = o.small_;
  }
  return *this;
}

int BigInt::cmp_mag(const BigInt& x, const BigInt& y) {
  if (x.size_ != y.size_) return x.size_ < y.size_ ? -1 : 1;
  for (uint32_t i = x.size_; i-- > 0;) {
    if (x.limbs()[i] != y.limbs()[i]) return x.limbs()[i] < y.limbs()[i] ? -1 : 1;
  }
  return 0;
}

void BigInt::add_mag(const BigInt& x, const BigInt& y, BigInt& out) {
  const BigInt& a = x.size_ >= y.size_ ? x : y;
  const BigInt& b = x.size_ >= y.size_ ? y : x;
  out.reserve(a.size_ + 1);
  u64 carry = 0;
  uint32_t i = 0;
  for (; i < b.size_; ++i) {
    u128 s = static_cast<u128>(a.limbs()[i]) + b.limbs()[i] + carry;
    out.limbs()[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  for (; i < a.size_; ++i) {
    u128 s = static_cast<u128>(a.limbs()[i]) + carry;
    out.limbs()[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  out.limbs()[i] = carry;
  out.size_ = a.size_ + (carry ? 1 : 0);
}

void BigInt::sub_mag(const BigInt& x, const BigInt& y, BigInt& out) {
  out.reserve(x.size_);
  u64 borrow = 0;
  uint32_t i = 0;
  for (; i < y.size_; ++i) {
    u64 xi = x.limbs()[i], yi = y.limbs()[i];
    u64 d = xi - yi - borrow;
    borrow = (xi < yi || (xi == yi && borrow)) ? 1 : 0;
    out.limbs()[i] = d;
  }
  for (; i < x.size_; ++i) {
    u64 xi = x.limbs()[i];
    u64 d = xi - borrow;
    borrow = (xi < borrow) ? 1 : 0;
    out.limbs()[i] = d;
  }
  out.size_ = x.size_;
  out.trim();
}

void BigInt::mul_mag(const BigInt& x, const BigInt& y, BigInt& out) {
  if (x.size_ == 0 || y.size_ == 0) {
    out.size_ = 0;
    out.neg_ = false;
    return;
  }
  BigInt tmp;
  tmp.reserve(x.size_ + y.size_);
  std::fill(tmp.limbs(), tmp.limbs() + x.size_ + y.size_, 0);
  for (uint32_t i = 0; i < x.size_; ++i) {
    u64 carry = 0;
    u64 xi = x.limbs()[i];
    for (uint32_t j = 0; j < y.size_; ++j) {
      u128 cur = static_cast<u128>(xi) * y.limbs()[j] + tmp.limbs()[i + j] + carry;
      tmp.limbs()[i + j] = static_cast<u64>(cur);
      carry = static_cast<u64>(cur >> 64);
    }
    tmp.limbs()[i + y.size_] = carry;
  }
  tmp.size_ = x.size_ + y.size_;
  tmp.trim();
  out = std::move(tmp);
}

// Knuth algorithm D on 64-bit limbs.
void BigInt::divmod_mag(const BigInt& u, const BigInt& v, BigInt& q, BigInt& r) {
  assert(v.size_ > 0);
  if (cmp_mag(u, v) < 0) {
    r = u;
    r.neg_ = false;
    q = BigInt();
    return;
  }
  if (v.size_ == 1) {
    u64 d = v.limbs()[0];
    BigInt quo;
    quo.reserve(u.size_);
    u128 rem = 0;
    for (uint32_t i = u.size_; i-- > 0;) {
      u128 cur = (rem << 64) | u.limbs()[i];
      quo.limbs()[i] = static_cast<u64>(cur / d);
      rem = cur % d;
    }
    quo.size_ = u.size_;
    quo.trim();
    q = std::move(quo);
    r = BigInt(static_cast<unsigned long long>(rem));
    return;
  }

  const int shift = __builtin_clzll(v.limbs()[v.size_ - 1]);
  const uint32_t n = v.size_;
  const uint32_t m = u.size_ - n;

  std::vector<u64> vn(n), un(u.size_ + 1);
  if (shift == 0) {
    for (uint32_t i = 0; i < n; ++i) vn[i] = v.limbs()[i];
    for (uint32_t i = 0; i < u.size_; ++i) un[i] = u.limbs()[i];
    un[u.size_] = 0;
  } else {
    for (uint32_t i = n; i-- > 1;)
      vn[i] = (v.limbs()[i] << shift) | (v.limbs()[i - 1] >> (64 - shift));
    vn[0] = v.limbs()[0] << shift;
    un[u.size_] = u.limbs()[u.size_ - 1] >> (64 - shift);
    for (uint32_t i = u.size_; i-- > 1;)
      un[i] = (u.limbs()[i] << shift) | (u.limbs()[i - 1] >> (64 - shift));
    un[0] = u.limbs()[0] << shift;
  }

  BigInt quo;
  quo.reserve(m + 1);
  for (uint32_t j = m + 1; j-- > 0;) {
    u128 num = (static_cast<u128>(un[j + n]) << 64) | un[j + n - 1];
    u128 qhat = num / vn[n - 1];
    u128 rhat = num % vn[n - 1];
    while (qhat > ~static_cast<u64>(0) ||
           qhat * vn[n - 2] > ((rhat << 64) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat > ~static_cast<u64>(0)) break;
    }
    // multiply-subtract
    u128 borrow = 0, carry = 0;
    for (uint32_t i = 0; i < n; ++i) {
      u128 p = qhat * vn[i] + carry;
      carry = p >> 64;
      u64 pl = static_cast<u64>(p);
      u64 ui = un[i + j];
      u64 d = ui - pl - static_cast<u64>(borrow);
      borrow = (static_cast<u128>(ui) < static_cast<u128>(pl) + borrow) ? 1 : 0;
      un[i + j] = d;
    }
    u64 top = un[j + n];
    u64 d = top - static_cast<u64>(carry) - static_cast<u64>(borrow);
    bool neg = static_cast<u128>(top) < carry + borrow;
    un[j + n] = d;
    if (neg) {
      // qhat was one too large; add back
      --qhat;
      u128 c2 = 0;
      for (uint32_t i = 0; i < n; ++i) {
        u128 s = static_cast<u128>(un[i + j]) + vn[i] + c2;
        un[i + j] = static_cast<u64>(s);
        c2 = s >> 64;
      }
      un[j + n] += static_cast<u64>(c2);
    }
    quo.limbs()[j] = static_cast<u64>(qhat);
  }
  quo.size_ = m + 1;
  quo.trim();

  BigInt rem;
  rem.reserve(n);
  if (shift == 0) {
    for (uint32_t i = 0; i < n; ++i) rem.limbs()[i] = un[i];
  } else {
    for (uint32_t i = 0; i < n - 1; ++i)
      rem.limbs()[i] = (un[i] >> shift) | (un[i + 1] << (64 - shift));
    rem.limbs()[n - 1] = un[n - 1] >> shift;
  }
  rem.size_ = n;
  rem.trim();
  q = std::move(quo);
  r = std::move(rem);
}

BigInt operator+(const BigInt& x, const BigInt& y) {
  BigInt out;
  if (x.neg_ == y.neg_) {
    BigInt::add_mag(x, y, out);
    out.neg_ = x.neg_;
  } else {
    int c = BigInt::cmp_mag(x, y);
    if (c == 0) return BigInt();
    if (c > 0) {
      BigInt::sub_mag(x, y, out);
      out.neg_ = x.neg_;
    } else {
      BigInt::sub_mag(y, x, out);
      out.neg_ = y.neg_;
    }
  }
  out.trim();
  return out;
}

BigInt operator-(const BigInt& x, const BigInt& y) {
  BigInt yn = y;
  yn.neg_ = !yn.neg_;
  if (yn.size_ == 0) yn.neg_ = false;
  return x + yn;
}

BigInt operator*(const BigInt& x, const BigInt& y) {
  BigInt out;
  BigInt::mul_mag(x, y, out);
  out.neg_ = out.size_ > 0 && (x.neg_ != y.neg_);
  return out;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
  if (den.size_ == 0) throw std::domain_error("BigInt: division by zero");
  divmod_mag(num, den, q, r);
  q.neg_ = q.size_ > 0 && (num.neg_ != den.neg_);
  r.neg_ = r.size_ > 0 && num.neg_;
}

BigInt operator/(const BigInt& x, const BigInt& y) {
  BigInt q, r;
  BigInt::divmod(x, y, q, r);
  return q;
}

BigInt operator%(const BigInt& x, const BigInt& y) {
  BigInt q, r;
  BigInt::divmod(x, y, q, r);
  return r;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (out.size_ > 0) out.neg_ = !out.neg_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.neg_ = false;
  return out;
}

bool operator==(const BigInt& x, const BigInt& y) {
  return x.neg_ == y.neg_ && BigInt::cmp_mag(x, y) == 0;
}

std::strong_ordering operator<=>(const BigInt& x, const BigInt& y) {
  if (x.neg_ != y.neg_) return x.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = BigInt::cmp_mag(x, y);
  if (x.neg_) c = -c;
  return c < 0    ? std::strong_ordering::less
         : c == 0 ? std::strong_ordering::equal
                  : std::strong_ordering::greater;
}

BigInt::BigInt(std::string_view s) : size_(0), neg_(false), heap_(false) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size()) throw std::invalid_argument("BigInt: empty decimal string");
  BigInt acc;
  const BigInt chunk_base(10000000000000000000ull);  // 10^19
  while (i < s.size()) {
    size_t take = std::min<size_t>(19, s.size() - i);
    u64 part = 0;
    u64 scale = 1;
    for (size_t j = 0; j < take; ++j) {
      char c = s[i + j];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      part = part * 10 + static_cast<u64>(c - '0');
      scale *= 10;
    }
    acc = acc * (take == 19 ? chunk_base : BigInt(static_cast<unsigned long long>(scale))) +
          BigInt(static_cast<unsigned long long>(part));
    i += take;
  }
  *this = std::move(acc);
  if (size_ > 0) neg_ = neg;
}

std::string BigInt::to_string() const {
  if (size_ == 0) return "0";
  std::vector<u64> chunks;
  BigInt cur = abs();
  const BigInt base(10000000000000000000ull);
  while (!cur.is_zero()) {
    BigInt q, r;
    divmod(cur, base, q, r);
    chunks.push_back(r.size_ == 0 ? 0 : r.limbs()[0]);
    cur = std::move(q);
  }
  std::string out;
  if (neg_) out.push_back('-');
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(chunks.back()));
  out += buf;
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::snprintf(buf, sizeof buf, "%019llu", static_cast<unsigned long long>(chunks[i]));
    out += buf;
  }
  return out;
}

double BigInt::to_double() const {
  if (size_ == 0) return 0.0;
  double r = 0.0;
  uint32_t top = size_;
  uint32_t lo = top > 2 ? top - 2 : 0;
  for (uint32_t i = top; i-- > lo;) r = r * 18446744073709551616.0 + static_cast<double>(limbs()[i]);
  r = std::ldexp(r, 64 * static_cast<int>(lo));
  return neg_ ? -r : r;
}

bool BigInt::fits_ll() const {
  if (size_ == 0) return true;
  if (size_ > 1) return false;
  u64 m = limbs()[0];
  return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
}

long long BigInt::to_ll() const {
  assert(fits_ll());
  if (size_ == 0) return 0;
  u64 m = limbs()[0];
  return neg_ ? -static_cast<long long>(m) : static_cast<long long>(m);
}

BigInt BigInt::pow10(unsigned k) {
  BigInt r(1);
  BigInt ten(10);
  BigInt p = ten;
  while (k) {
    if (k & 1) r *= p;
    p *= p;
    k >>= 1;
  }
  return r;
}

BigInt gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

size_t BigInt::bit_length() const {
  if (size_ == 0) return 0;
  return static_cast<size_t>(size_) * 64 - __builtin_clzll(limbs()[size_ - 1]);
}

BigInt isqrt(const BigInt& n) {
  if (n.is_negative()) throw std::domain_error("isqrt: negative argument");
  if (n.is_zero()) return BigInt(0);
  // seed above the root, then monotone Newton descent
  BigInt x = BigInt(1);
  size_t half = (n.bit_length() + 1) / 2;
  for (size_t i = 0; i < half; ++i) x += x;
  while (true) {
    BigInt y = (x + n / x) / BigInt(2);
    if (!(y < x)) break;
    x = std::move(y);
  }
  return x;
}

namespace {
constexpr long kFibCacheMax = 512;
std::array<BigInt, kFibCacheMax + 1> g_fib_cache;
std::once_flag g_fib_once;

void fill_fib_cache() {
  g_fib_cache[0] = BigInt(0);
  g_fib_cache[1] = BigInt(1);
  for (long i = 2; i <= kFibCacheMax; ++i)
    g_fib_cache[i] = g_fib_cache[i - 1] + g_fib_cache[i - 2];
}
}  // namespace

const BigInt& fibonacci(long n) {
  std::call_once(g_fib_once, fill_fib_cache);
  if (n == -1) return g_fib_cache[1];  // F(-1) = 1
  if (n < -1 || n > kFibCacheMax) throw std::out_of_range("fibonacci: index out of cached range");
  return g_fib_cache[n];
}

BigInt fibonacci_value(long n) {
  if (n >= -1) return fibonacci(n);
  BigInt v = fibonacci(-n);
  return (-n) % 2 == 0 ? -v : v;
}

}  // namespace circlegap
