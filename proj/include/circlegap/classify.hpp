#pragma once

#include <array>
#include <optional>
#include <vector>

#include "circlegap/discrepancy.hpp"

namespace circlegap {

using PrefixTuple = std::array<int, 5>;

/// Largest admissible partial quotient a_n (1 <= n <= 5) for a prefix whose
/// scaled gaps can stay below rho: the greatest integer strictly below
/// (5 + 2 sqrt5)(1 + 1/F_n), evaluated exactly.
int prefix_bound(int n);

/// Search depth N + d0 for a 5-term prefix (N = 5): d0 >= 1 minimal with
/// F_{d0+1} (5 + 2 sqrt5) > k_5 + k_4. Beyond this depth the tail estimate
/// certifies every remaining bracket.
long depth_bound(const PrefixTuple& prefix);

struct CandidateResult {
  bool pass = false;
  /// Exact equality with rho seen at some bracket end (tolerated but
  /// reported; would merit a close look, never observed).
  bool equality_seen = false;
  /// For passing tuples: min over checked brackets of rho - (m_hi+1)*gap.
  std::optional<QuadSurd> worst_margin;
  /// For failing tuples: the first violating bracket end.
  BigInt violating_m;
};

/// Exact check of [0; a,b,c,d,e, 1,1,...]: every bracket end up to the
/// (certified) depth must satisfy (m_hi+1)*gap < rho. max_depth = 0 picks
/// depth_bound(prefix).
CandidateResult check_candidate(const PrefixTuple& prefix, long max_depth = 0);

/// Float64 rerun of the same scan, used only as a cross-check against the
/// exact path.
bool check_candidate_float(const PrefixTuple& prefix, long max_depth = 0);

struct SharpClass {
  PrefixTuple rep;      // representative with value <= 1/2 (a1 >= 2)
  PrefixTuple partner;  // reflection partner (a1 = 1)
  QuadSurd val;
  GLMatrix matrix;
};

struct SearchReport {
  long long scanned = 0;
  std::vector<PrefixTuple> passing;  // lexicographically sorted
  std::vector<QuadSurd> margins;     // per passing tuple: min of rho - (m+1)*gap
  std::vector<SharpClass> classes;   // sorted by representative tuple
  bool any_equality = false;
};

/// Exhaustive scan of the box a<=18, b<=18, c<=14, d<=12, e<=11 (bounds from
/// prefix_bound). Parallelizes over the outermost coordinate; the result is
/// canonically sorted, so output does not depend on scheduling.
SearchReport search_sharp_set(int jobs = 1);

/// Reflection partner of a passing tuple, as a 5-term prefix.
PrefixTuple reflect_tuple(const PrefixTuple& t);

/// Evaluates the tail-onset inequality at m = k_N + 2 k_{N+1} - 2 for a
/// fraction with a_{N+1} > 1 and ones afterwards: returns true when
/// (m+1) d >= rho there, i.e. when that single m already witnesses that the
/// value falls outside the sharp set. (For N = 5 with a small prefix the
/// witness can sit in an earlier bracket instead; see first_violation.)
bool tail_onset_check(const GoldenCF& cf, long N);

/// Smallest m with (m+1) d_theta(m) >= rho, scanning bracket ends up to
/// max_depth; nullopt if none found.
std::optional<BigInt> first_violation(const GoldenCF& cf, long max_depth);

}  // namespace circlegap
