#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "circlegap/classify.hpp"
#include "circlegap/discrepancy.hpp"

namespace circlegap {

/// One of the eight representatives eta_1..eta_8 of the sharp set mod the
/// reflection/shift identification, in increasing order of value.
struct EtaEntry {
  int index = 0;  // 1..8
  PrefixTuple prefix{};
  GoldenCF cf;
  QuadSurd val;
  GLMatrix matrix;
  BigInt k5, k6;
  int kindex = 0;            // pi(index): which K-sequence shadows its convergents
  long long coeff_a = 0;     // K_n(kindex) = coeff_a F_n + coeff_b F_{n-1}
  long long coeff_b = 0;
};

const std::array<EtaEntry, 8>& eta_catalog();

/// pi = (2 8 5)(3 7 6 4) in S_8, and its inverse.
int perm_pi(int i);
int perm_pi_inv(int i);

/// K_n(i) = A_i F_n + B_i F_{n-1}, with the index extension that adding 8 to
/// i steps the level by one: K_n(i + 8m) = K_{n+m}(i), so K_n(0) = K_{n-1}(8)
/// and the flattened sequence ..., K_n(8), K_{n+1}(1), ... is one chain.
BigInt K(long n, long i);

/// K_n(1) < ... < K_n(8) < K_{n+1}(1), exactly.
bool cycle_check(long n);

/// Peak position M_n(i) = K_n(pi i) + 2 K_{n+1}(pi i) - 2 (= K_{n+3}(pi i)-2):
/// the bracket end where (m+1) d_{eta_i}(m) culminates at level n.
BigInt peak_m(long n, int i);
/// The gap value there: 1 / (K_{n-1}(pi i) + K_n(pi i) phi).
QuadSurd peak_gap(long n, int i);

struct TieError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact D_M evaluator for the eight catalog values, valid for M <= horizon.
/// argmin throws TieError on an exact tie (never observed; the minimizer is
/// presumed well-defined).
class MinimizerOracle {
 public:
  explicit MinimizerOracle(long long horizon);
  long long horizon() const { return horizon_; }
  QuadSurd dm(int i, long long M) const;  // D_M(eta_i)
  int argmin(long long M) const;          // 1..8

 private:
  struct Seg {
    long long m_lo, m_hi;
    QuadSurd gap;
    QuadSurd best_before;  // max (m_hi+1)*gap over earlier brackets
  };
  long long horizon_;
  std::array<std::vector<Seg>, 8> segs_;
};

/// Maximal interval on which eta_i minimizes D_M.
struct RunInterval {
  int eta = 0;    // 1..8
  long level = 0; // n of the closed form
  long long lo = 0, hi = 0;
};

/// Generic-cycle closed form for the start of the minimizer run at slot
/// (level, kindex): floor((K_{level+2}(kindex) - 1) * phi * u_{kindex-1} /
/// u_kindex) with u_j = A_j phi + B_j along the flattened chain -- the first
/// m where the outgoing minimizer's rising (m+1)*gap passes the held peak of
/// eta_{pi^-1(kindex)}. Exact once the succession has settled into the
/// plain 8-cycle (level >= 3, roughly m >= 660); below that the true
/// succession occasionally skips an eta because the held peak values
/// (K_{n+3}(j)-1)/(K_{n-1}(j)+K_n(j) phi) are not yet sorted slot-by-slot,
/// and runs_covering must be used instead.
long long run_start(long level, int kindex);

/// The exact run decomposition, clipped to [lo, hi] (lo >= 50, to stay
/// clear of the multi-quotient bracket region). Computed as an event sweep
/// over the peak positions: every boundary is the exact crossing
/// floor(V * c) of the outgoing minimizer's rising branch against the
/// smallest other held peak V, so each boundary instantiates the same
/// closed form as run_start but with the crossing target chosen by the
/// exact peak ordering. Agrees with MinimizerOracle everywhere (the
/// acceptance suite pins [70, 20000]); runs abut exactly.
std::vector<RunInterval> runs_covering(long long lo, long long hi);

/// W counts: how often each eta is the minimizer for m in [1, M].
/// fast path = run intervals for m >= 70, oracle below; slow path = oracle
/// scan throughout. Index 0 of the result counts ties (expected 0).
std::array<long long, 9> minimizer_counts_fast(long long M);
std::array<long long, 9> minimizer_counts_oracle(long long M, const MinimizerOracle& oracle);

/// Least M* such that the strict chain
/// W1 > W7 > W4 > W2 > W6 > W3 > W8 > W5 holds for every M in [M*, horizon].
struct BiasScan {
  long long onset = 0;
  bool holds_at_horizon = false;
  std::array<long long, 9> counts_at_horizon{};
};
BiasScan bias_chain_scan(long long horizon);

/// Exact liminf/limsup of W_{eta_i}(M)/M: with j = pi(i) and
/// u_j = A_j phi + B_j (u_0 = u_8/phi),
///   LI(i) = (u_j - u_{j-1}) phi   / u_{j-1}
///   LS(i) = (u_j - u_{j-1}) phi^2 / u_j.
struct LiLs {
  QuadSurd li, ls;
};
LiLs li_ls_exact(int i);

}  // namespace circlegap
