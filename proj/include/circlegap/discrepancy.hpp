#pragma once

#include <vector>

#include "circlegap/contfrac.hpp"

namespace circlegap {

/// Sorted fractional parts of {0, theta, ..., m*theta} and their circle gaps.
/// For irrational theta at most 3 distinct gap lengths occur and, when there
/// are 3, the two shorter ones sum to the longest.
struct GapReport {
  std::vector<QuadSurd> points;        // sorted, in [0,1)
  std::vector<QuadSurd> distinct_gaps; // sorted ascending
  QuadSurd max_gap;
};

/// Brute-force oracle: exact fractional parts, exact sort, exact gaps.
/// max_gap is the discrepancy gap d_theta(m). Accepts any real in Q(sqrt5);
/// values outside [0,1) are reduced mod 1 first.
GapReport circle_gaps(const QuadSurd& theta, long m);
GapReport circle_gaps(const Rational& theta, long m);

/// One constancy interval of the gap function: for
/// k_n + (alpha+1) k_{n+1} - 1 <= m <= k_n + (alpha+2) k_{n+1} - 2 the gap
/// equals (theta_{n+2} - alpha) / (k_n + k_{n+1} theta_{n+2}).
struct Bracket {
  long n = -1;
  long long alpha = 0;
  BigInt m_lo, m_hi;
  BigInt k_n, k_n1;    // k_n, k_{n+1}
  QuadSurd theta_n2;   // theta_{n+2}
  QuadSurd gap;
};

/// Iterates the brackets of a golden continued fraction with a0 = 0 in
/// increasing m order, starting at (n, alpha) = (-1, 0) with seeds
/// k(-1) = 0, k(-2) = 1 so that the ranges tile all m >= 0.
class BracketWalker {
 public:
  explicit BracketWalker(const GoldenCF& cf);
  const Bracket& current() const { return cur_; }
  void advance();

 private:
  GoldenCF cf_;
  std::vector<QuadSurd> tails_;  // theta_1 .. theta_{N+1}
  Bracket cur_;
  void fill_range_and_gap();
  const QuadSurd& theta_at(long i) const;
};

/// The unique bracket whose range contains m (m >= 0).
Bracket bracket_for(const GoldenCF& cf, const BigInt& m);

/// d_theta(m) by the closed tail form of its bracket.
QuadSurd gap_tail_form(const GoldenCF& cf, const BigInt& m);

/// d_theta(m) as |(k_n theta - h_n) - alpha (k_{n+1} theta - h_{n+1})|,
/// the three-distance residue form; always equals gap_tail_form.
QuadSurd gap_residue_form(const GoldenCF& cf, const BigInt& m);

/// (m+1) * d_theta(m).
QuadSurd scaled_gap(const GoldenCF& cf, const BigInt& m);

/// D_M = max over m in {1..M} of (m+1) d_theta(m). Evaluates only bracket
/// right ends and M itself: the gap is constant per bracket, so (m+1)*gap is
/// maximized at each bracket's right end. m = 0 is excluded.
QuadSurd max_scaled_gap(const GoldenCF& cf, const BigInt& M);

/// Certified/empirical onset of (m+1) d_theta(m) < rho for all m >= M.
///
/// certified = k_{N0} + k_{N0+1} - 1, N0 = N + d0, where d0 >= 1 is minimal
/// with F_{d0+1} * (5 + 2 sqrt5) > k_N + k_{N-1} (exact comparison); past
/// that depth the tail estimate keeps every scaled gap below rho.
/// empirical = 1 + the largest violating m <= certified (1 when none).
struct EventualBound {
  BigInt certified;
  BigInt empirical;
  long d0 = 0;
};
EventualBound eventual_bound(const GoldenCF& cf);

/// True when no m in [lo, hi] has (m+1) d_theta(m) >= rho.
bool no_violation_in(const GoldenCF& cf, const BigInt& lo, const BigInt& hi);

}  // namespace circlegap
