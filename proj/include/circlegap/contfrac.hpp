#pragma once

#include <string>
#include <vector>

#include "circlegap/quadsurd.hpp"

namespace circlegap {

/// Continued fraction [a0; a1, ..., aN, 1, 1, 1, ...] with an implicit
/// all-ones tail. The stored prefix is the identity of the object; trailing
/// ones are not stripped. a0 may be any integer, a1..aN must be >= 1.
struct GoldenCF {
  long long a0 = 0;
  std::vector<long long> prefix;  // a1..aN

  GoldenCF() = default;
  GoldenCF(long long a0_, std::vector<long long> prefix_);

  /// Partial quotient a_i for any i >= 0 (1 beyond the prefix).
  long long quotient(size_t i) const {
    if (i == 0) return a0;
    return i <= prefix.size() ? prefix[i - 1] : 1;
  }
  size_t prefix_len() const { return prefix.size(); }  // N

  friend bool operator==(const GoldenCF&, const GoldenCF&) = default;
};

/// Convergent h_n / k_n with its index; seeds h(-1)=1, h(-2)=0, k(-1)=0,
/// k(-2)=1.
struct Convergent {
  BigInt h, k;
  long n = -2;
};

struct GLMatrix {
  BigInt p, q, r, s;  // x -> (p x + q) / (r x + s)
  BigInt det() const { return p * s - q * r; }
};

/// Exact value of the continued fraction, via the convergent recurrence over
/// the prefix applied to the tail value phi.
QuadSurd value(const GoldenCF& cf);

/// Convergents h_i/k_i for 0 <= i <= n (tail quotients are ones).
std::vector<Convergent> convergents(const GoldenCF& cf, long n);

/// Tail theta_n = [a_n, a_{n+1}, ...]; phi for n > N.
QuadSurd tail(const GoldenCF& cf, long n);

/// Reversed fraction x_n = [a_{n+1}, a_n, ..., a_1], a rational. Computed by
/// direct reversal; the classical identity x_n = k_{n+1}/k_n is verified in
/// tests rather than assumed.
Rational reversed_fraction(const GoldenCF& cf, long n);

/// Moebius action (p x + q)/(r x + s).
QuadSurd moebius(const GLMatrix& M, const QuadSurd& x);

/// Checks k_{N+d} = F_{d+1} k_N + F_d k_{N-1} for an all-ones tail after
/// position N; a test oracle, expected true.
bool ones_tail_convergent_identity(const GoldenCF& cf, long N, long d);

/// f(x) = [1,...,1,x] with n+2 entries, i.e. (F_{n+2} x + F_{n+1}) /
/// (F_{n+1} x + F_n).
QuadSurd monotone_eval(long n, const QuadSurd& x);

/// [0;a1,a2,...] with a1 >= 2 maps to [0;1,a1-1,a2,...] and vice versa;
/// values reflect as v -> 1 - v. Requires a0 = 0.
GoldenCF reflect(const GoldenCF& cf);

/// Shortest equivalent prefix (trailing ones folded into the tail).
GoldenCF minimal_form(const GoldenCF& cf);

/// Moebius matrix of the minimal form: maps phi to value(cf).
GLMatrix matrix_of(const GoldenCF& cf);

/// Text form "[a0;a1,...,aN,(1)]"; "(1)" marks the golden tail. An empty
/// prefix prints as "[a0;(1)]". parse/print round-trip exactly.
std::string to_text(const GoldenCF& cf);
GoldenCF parse_cf(const std::string& text);

}  // namespace circlegap
