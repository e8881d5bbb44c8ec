#include "circlegap/asymptotics.hpp"

#include <algorithm>

namespace circlegap {

namespace {

constexpr std::array<std::array<int, 5>, 8> kEtaPrefixes{{
    {5, 2, 1, 1, 1},  // eta_1
    {4, 1, 1, 1, 1},  // eta_2
    {4, 2, 1, 1, 1},  // eta_3
    {3, 1, 1, 1, 1},  // eta_4
    {3, 2, 1, 1, 1},  // eta_5
    {2, 1, 2, 1, 1},  // eta_6
    {2, 1, 1, 1, 1},  // eta_7
    {2, 2, 1, 1, 1},  // eta_8
}};

// K_n(i) = A_i F_n + B_i F_{n-1}
constexpr std::array<std::array<long long, 2>, 9> kKCoeff{{
    {0, 0},  // unused
    {70, 43},
    {71, 44},
    {76, 47},
    {79, 49},
    {81, 50},
    {89, 55},
    {92, 57},
    {97, 60},
}};

constexpr std::array<int, 9> kPi{0, 1, 8, 7, 3, 2, 4, 6, 5};
constexpr std::array<int, 9> kPiInv{0, 1, 5, 4, 6, 8, 7, 3, 2};

std::array<EtaEntry, 8> build_catalog() {
  std::array<EtaEntry, 8> out;
  for (int i = 1; i <= 8; ++i) {
    EtaEntry& e = out[static_cast<size_t>(i - 1)];
    e.index = i;
    const auto& p = kEtaPrefixes[static_cast<size_t>(i - 1)];
    std::copy(p.begin(), p.end(), e.prefix.begin());
    e.cf = GoldenCF(0, std::vector<long long>(p.begin(), p.end()));
    e.val = value(e.cf);
    e.matrix = matrix_of(e.cf);
    auto cs = convergents(e.cf, 6);
    e.k5 = cs[5].k;
    e.k6 = cs[6].k;
    e.kindex = kPi[static_cast<size_t>(i)];
    e.coeff_a = kKCoeff[static_cast<size_t>(e.kindex)][0];
    e.coeff_b = kKCoeff[static_cast<size_t>(e.kindex)][1];
  }
  return out;
}

}  // namespace

const std::array<EtaEntry, 8>& eta_catalog() {
  static const std::array<EtaEntry, 8> catalog = build_catalog();
  return catalog;
}

int perm_pi(int i) {
  if (i < 1 || i > 8) throw std::invalid_argument("perm_pi: index in [1,8]");
  return kPi[static_cast<size_t>(i)];
}

int perm_pi_inv(int i) {
  if (i < 1 || i > 8) throw std::invalid_argument("perm_pi_inv: index in [1,8]");
  return kPiInv[static_cast<size_t>(i)];
}

BigInt K(long n, long i) {
  // normalize the index into [1,8], shifting the level along the flattened
  // chain: K_n(i+8m) = K_{n+m}(i)
  long m = (i - 1) / 8;
  long i0 = i - 8 * m;
  if (i0 < 1) {
    i0 += 8;
    m -= 1;
  }
  long level = n + m;
  BigInt A(kKCoeff[static_cast<size_t>(i0)][0]);
  BigInt B(kKCoeff[static_cast<size_t>(i0)][1]);
  return A * fibonacci_value(level) + B * fibonacci_value(level - 1);
}

bool cycle_check(long n) {
  for (int i = 1; i <= 8; ++i)
    if (!(K(n, i) < K(n, i + 1))) return false;  // K(n,9) = K(n+1,1)
  return true;
}

BigInt peak_m(long n, int i) {
  int j = perm_pi(i);
  return K(n, j) + BigInt(2) * K(n + 1, j) - BigInt(2);
}

QuadSurd peak_gap(long n, int i) {
  int j = perm_pi(i);
  return (QuadSurd(K(n - 1, j)) + QuadSurd(K(n, j)) * QuadSurd::phi()).inverse();
}

MinimizerOracle::MinimizerOracle(long long horizon) : horizon_(horizon) {
  const auto& cat = eta_catalog();
  for (int i = 0; i < 8; ++i) {
    BracketWalker w(cat[static_cast<size_t>(i)].cf);
    QuadSurd best(BigInt(0));
    auto& segs = segs_[static_cast<size_t>(i)];
    while (true) {
      const Bracket& br = w.current();
      Seg s;
      s.m_lo = br.m_lo.to_ll();
      s.m_hi = br.m_hi.to_ll();
      s.gap = br.gap;
      s.best_before = best;
      segs.push_back(s);
      QuadSurd at_end = QuadSurd(br.m_hi + BigInt(1)) * br.gap;
      if (best < at_end) best = at_end;
      if (br.m_hi > BigInt(2) * BigInt(horizon)) break;
      w.advance();
    }
  }
}

QuadSurd MinimizerOracle::dm(int i, long long M) const {
  if (M < 1 || M > horizon_) throw std::out_of_range("MinimizerOracle::dm");
  const auto& segs = segs_[static_cast<size_t>(i - 1)];
  auto it = std::partition_point(segs.begin(), segs.end(),
                                 [&](const Seg& s) { return s.m_hi < M; });
  QuadSurd at = QuadSurd(BigInt(M + 1)) * it->gap;
  return it->best_before < at ? at : it->best_before;
}

int MinimizerOracle::argmin(long long M) const {
  int best = 1;
  QuadSurd best_val = dm(1, M);
  bool tie = false;
  for (int i = 2; i <= 8; ++i) {
    QuadSurd v = dm(i, M);
    auto c = v <=> best_val;
    if (c == std::strong_ordering::less) {
      best = i;
      best_val = v;
      tie = false;
    } else if (c == std::strong_ordering::equal) {
      tie = true;
    }
  }
  if (tie)
    throw TieError("exact tie in argmin D_M at M = " + std::to_string(M));
  return best;
}

namespace {

// u_j = A_j phi + B_j; the weight of slot j in the flattened chain
QuadSurd slot_weight(int j) {
  return QuadSurd(BigInt(kKCoeff[static_cast<size_t>(j)][0])) * QuadSurd::phi() +
         QuadSurd(BigInt(kKCoeff[static_cast<size_t>(j)][1]));
}

// phi * u_{j-1} / u_j along the flattened chain (wraps to u_8/phi at j = 1)
const QuadSurd& slot_ratio(int j) {
  static const std::array<QuadSurd, 9> ratios = [] {
    std::array<QuadSurd, 9> r;
    QuadSurd phi = QuadSurd::phi();
    for (int jj = 1; jj <= 8; ++jj) {
      QuadSurd prev = jj == 1 ? slot_weight(8) / phi : slot_weight(jj - 1);
      r[static_cast<size_t>(jj)] = phi * prev / slot_weight(jj);
    }
    return r;
  }();
  return ratios[static_cast<size_t>(j)];
}

}  // namespace

long long run_start(long level, int kindex) {
  if (kindex < 1 || kindex > 8) throw std::invalid_argument("run_start: kindex in [1,8]");
  QuadSurd pos = QuadSurd(K(level + 2, kindex) - BigInt(1)) * slot_ratio(kindex);
  return pos.floor().to_ll();
}

namespace {

// Per-eta state of the peak-event sweep: the held running max of
// (m+1)*gap, and the bracket currently being climbed.
struct SweepEta {
  QuadSurd held;
  QuadSurd ramp_c;    // 1/gap of the current bracket, = K_{n-1} + K_n phi
  long long peak = 0; // current bracket end
  BracketWalker walker;
  long level = 0;     // n with peak = K(n+3, kindex) - 2
};

long find_level(long long peak, int kindex) {
  for (long n = -6; n <= 80; ++n)
    if (K(n + 3, kindex) - BigInt(2) == BigInt(peak)) return n;
  throw std::logic_error("runs_covering: peak is not on the K grid");
}

}  // namespace

std::vector<RunInterval> runs_covering(long long lo, long long hi) {
  if (lo < 50 || hi < lo) throw std::invalid_argument("runs_covering: need 50 <= lo <= hi");
  constexpr long long kStart = 45;  // all etas are in single-quotient brackets here
  const auto& cat = eta_catalog();

  std::vector<SweepEta> st;
  st.reserve(8);
  for (int i = 0; i < 8; ++i) {
    SweepEta s{QuadSurd(BigInt(0)), QuadSurd(BigInt(1)), 0, BracketWalker(cat[static_cast<size_t>(i)].cf), 0};
    while (s.walker.current().m_hi < BigInt(kStart)) {
      const Bracket& br = s.walker.current();
      if (br.m_hi.sign() > 0) {
        QuadSurd v = QuadSurd(br.m_hi + BigInt(1)) * br.gap;
        if (s.held < v) s.held = v;
      }
      s.walker.advance();
    }
    s.peak = s.walker.current().m_hi.to_ll();
    s.ramp_c = s.walker.current().gap.inverse();
    s.level = find_level(s.peak, cat[static_cast<size_t>(i)].kindex);
    st.push_back(std::move(s));
  }

  auto strict_argmin_held = [&](int except) {
    int best = -1;
    bool tie = false;
    for (int i = 0; i < 8; ++i) {
      if (i == except) continue;
      if (best < 0) {
        best = i;
        continue;
      }
      auto c = st[static_cast<size_t>(i)].held <=> st[static_cast<size_t>(best)].held;
      if (c == std::strong_ordering::less) {
        best = i;
        tie = false;
      } else if (c == std::strong_ordering::equal) {
        tie = true;
      }
    }
    if (tie) throw TieError("exact tie between held peaks in runs_covering");
    return best;
  };

  int cur = strict_argmin_held(-1);
  long long run_lo = kStart;  // boundary effects before lo are clipped away
  std::vector<RunInterval> out;

  auto emit = [&](long long next_lo) {
    RunInterval r;
    r.eta = cur + 1;
    r.level = st[static_cast<size_t>(cur)].level;
    r.lo = std::max(run_lo, lo);
    r.hi = std::min(next_lo - 1, hi);
    if (r.lo <= r.hi) out.push_back(r);
    run_lo = next_lo;
  };

  while (run_lo <= hi) {
    // next peak event in m order
    int z = 0;
    for (int i = 1; i < 8; ++i)
      if (st[static_cast<size_t>(i)].peak < st[static_cast<size_t>(z)].peak) z = i;
    SweepEta& ez = st[static_cast<size_t>(z)];
    if (z == cur) {
      // the minimizer climbs out: switch at the crossing of the smallest
      // other held peak, if it lands within this bracket
      int y = strict_argmin_held(cur);
      QuadSurd cross = st[static_cast<size_t>(y)].held * ez.ramp_c;
      long long m_star = cross.floor().to_ll();  // first m with m+1 > cross
      if (m_star <= ez.peak) {
        emit(m_star);
        cur = y;
      }
    }
    QuadSurd at_peak = QuadSurd(BigInt(ez.peak + 1)) * ez.walker.current().gap;
    if (ez.held < at_peak) ez.held = at_peak;
    ez.walker.advance();
    ez.peak = ez.walker.current().m_hi.to_ll();
    ez.ramp_c = ez.walker.current().gap.inverse();
    ++ez.level;
  }
  return out;
}

std::array<long long, 9> minimizer_counts_oracle(long long M, const MinimizerOracle& oracle) {
  std::array<long long, 9> counts{};
  for (long long m = 1; m <= M; ++m) {
    int i;
    try {
      i = oracle.argmin(m);
    } catch (const TieError&) {
      i = 0;
    }
    ++counts[static_cast<size_t>(i)];
  }
  return counts;
}

namespace {
constexpr long long kRunsValidFrom = 70;
}

std::array<long long, 9> minimizer_counts_fast(long long M) {
  std::array<long long, 9> counts{};
  long long small_top = std::min(M, kRunsValidFrom - 1);
  static const MinimizerOracle small_oracle(kRunsValidFrom + 8);
  for (long long m = 1; m <= small_top; ++m) {
    int i;
    try {
      i = small_oracle.argmin(m);
    } catch (const TieError&) {
      i = 0;
    }
    ++counts[static_cast<size_t>(i)];
  }
  if (M >= kRunsValidFrom)
    for (const RunInterval& r : runs_covering(kRunsValidFrom, M))
      counts[static_cast<size_t>(r.eta)] += r.hi - r.lo + 1;
  return counts;
}

BiasScan bias_chain_scan(long long horizon) {
  // chain: W1 > W7 > W4 > W2 > W6 > W3 > W8 > W5
  constexpr std::array<int, 8> order{1, 7, 4, 2, 6, 3, 8, 5};
  std::array<long long, 9> counts{};
  static const MinimizerOracle small_oracle(kRunsValidFrom + 8);
  std::vector<RunInterval> runs =
      horizon >= kRunsValidFrom ? runs_covering(kRunsValidFrom, horizon) : std::vector<RunInterval>{};
  size_t run_idx = 0;
  long long last_fail = 0;
  for (long long m = 1; m <= horizon; ++m) {
    int i;
    if (m < kRunsValidFrom) {
      try {
        i = small_oracle.argmin(m);
      } catch (const TieError&) {
        i = 0;
      }
    } else {
      while (run_idx < runs.size() && runs[run_idx].hi < m) ++run_idx;
      i = runs[run_idx].eta;
    }
    ++counts[static_cast<size_t>(i)];
    bool ok = true;
    for (size_t t = 0; t + 1 < order.size(); ++t)
      if (!(counts[static_cast<size_t>(order[t])] > counts[static_cast<size_t>(order[t + 1])])) {
        ok = false;
        break;
      }
    if (!ok) last_fail = m;
  }
  BiasScan out;
  out.onset = last_fail + 1;
  out.holds_at_horizon = last_fail < horizon;
  out.counts_at_horizon = counts;
  return out;
}

LiLs li_ls_exact(int i) {
  int j = perm_pi(i);
  QuadSurd phi = QuadSurd::phi();
  QuadSurd uj = slot_weight(j);
  QuadSurd ujm1 = j == 1 ? slot_weight(8) / phi : slot_weight(j - 1);
  QuadSurd diff = uj - ujm1;
  LiLs out;
  out.li = diff * phi / ujm1;
  out.ls = diff * phi * phi / uj;
  return out;
}

}  // namespace circlegap
