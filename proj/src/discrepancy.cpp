#include "circlegap/discrepancy.hpp"

#include <algorithm>
#include <stdexcept>

namespace circlegap {

GapReport circle_gaps(const QuadSurd& theta, long m) {
  if (m < 0) throw std::invalid_argument("circle_gaps: m must be >= 0");
  QuadSurd step = theta.frac();
  std::vector<QuadSurd> pts;
  pts.reserve(static_cast<size_t>(m) + 1);
  QuadSurd cur(BigInt(0));
  pts.push_back(cur);
  for (long i = 1; i <= m; ++i) {
    cur = (cur + step).frac();
    pts.push_back(cur);
  }
  std::sort(pts.begin(), pts.end());
  GapReport rep;
  std::vector<QuadSurd> gaps;
  gaps.reserve(pts.size());
  for (size_t i = 0; i + 1 < pts.size(); ++i) gaps.push_back(pts[i + 1] - pts[i]);
  gaps.push_back(QuadSurd(BigInt(1)) - pts.back() + pts.front());
  std::vector<QuadSurd> distinct = gaps;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  // duplicates at value 0 only happen for rational theta once points repeat
  if (distinct.size() > 1 && distinct.front().is_zero()) distinct.erase(distinct.begin());
  rep.points = std::move(pts);
  rep.max_gap = distinct.back();
  rep.distinct_gaps = std::move(distinct);
  return rep;
}

GapReport circle_gaps(const Rational& theta, long m) {
  return circle_gaps(QuadSurd(theta), m);
}

namespace {
void require_unit_interval(const GoldenCF& cf, const char* who) {
  if (cf.a0 != 0) throw std::invalid_argument(std::string(who) + ": requires a0 = 0");
}
}  // namespace

BracketWalker::BracketWalker(const GoldenCF& cf) : cf_(cf) {
  require_unit_interval(cf, "BracketWalker");
  long N = static_cast<long>(cf_.prefix_len());
  tails_.reserve(static_cast<size_t>(N) + 1);
  for (long i = 1; i <= N + 1; ++i) tails_.push_back(tail(cf_, i));
  cur_.n = -1;
  cur_.alpha = 0;
  cur_.k_n = BigInt(0);   // k(-1)
  cur_.k_n1 = BigInt(1);  // k(0)
  fill_range_and_gap();
}

const QuadSurd& BracketWalker::theta_at(long i) const {
  // tails_[j] holds theta_{j+1}; everything past the prefix is phi
  size_t idx = static_cast<size_t>(i) - 1;
  return idx < tails_.size() ? tails_[idx] : tails_.back();
}

void BracketWalker::fill_range_and_gap() {
  BigInt alpha(cur_.alpha);
  cur_.m_lo = cur_.k_n + (alpha + BigInt(1)) * cur_.k_n1 - BigInt(1);
  cur_.m_hi = cur_.k_n + (alpha + BigInt(2)) * cur_.k_n1 - BigInt(2);
  cur_.theta_n2 = theta_at(cur_.n + 2);
  cur_.gap = (cur_.theta_n2 - QuadSurd(alpha)) /
             (QuadSurd(cur_.k_n) + QuadSurd(cur_.k_n1) * cur_.theta_n2);
}

void BracketWalker::advance() {
  long long a_n2 = cf_.quotient(static_cast<size_t>(cur_.n + 2));
  if (cur_.alpha + 1 < a_n2) {
    ++cur_.alpha;
  } else {
    BigInt k_next = BigInt(a_n2) * cur_.k_n1 + cur_.k_n;
    cur_.k_n = std::move(cur_.k_n1);
    cur_.k_n1 = std::move(k_next);
    ++cur_.n;
    cur_.alpha = 0;
  }
  fill_range_and_gap();
}

Bracket bracket_for(const GoldenCF& cf, const BigInt& m) {
  if (m.is_negative()) throw std::invalid_argument("bracket_for: m must be >= 0");
  BracketWalker w(cf);
  while (w.current().m_hi < m) w.advance();
  // ranges tile [0, inf), so the first bracket reaching m contains it
  if (m < w.current().m_lo) throw std::logic_error("bracket_for: tiling gap");
  return w.current();
}

QuadSurd gap_tail_form(const GoldenCF& cf, const BigInt& m) {
  return bracket_for(cf, m).gap;
}

QuadSurd gap_residue_form(const GoldenCF& cf, const BigInt& m) {
  Bracket br = bracket_for(cf, m);
  QuadSurd theta = value(cf);
  auto cs = convergents(cf, br.n + 1);  // n >= -1, so n+1 >= 0
  BigInt h_n = br.n >= 0 ? cs[static_cast<size_t>(br.n)].h : BigInt(1);  // h(-1) = 1
  BigInt h_n1 = cs[static_cast<size_t>(br.n + 1)].h;
  // |k_n theta - h_n| - alpha |k_{n+1} theta - h_{n+1}|: consecutive
  // residues alternate in sign, so the signed residues are added
  QuadSurd r = (QuadSurd(br.k_n) * theta - QuadSurd(h_n)) +
               QuadSurd(BigInt(br.alpha)) * (QuadSurd(br.k_n1) * theta - QuadSurd(h_n1));
  return r.sign() < 0 ? -r : r;
}

QuadSurd scaled_gap(const GoldenCF& cf, const BigInt& m) {
  return QuadSurd(m + BigInt(1)) * gap_tail_form(cf, m);
}

QuadSurd max_scaled_gap(const GoldenCF& cf, const BigInt& M) {
  if (M < BigInt(1)) throw std::invalid_argument("max_scaled_gap: M must be >= 1");
  BracketWalker w(cf);
  QuadSurd best(BigInt(0));
  while (true) {
    const Bracket& br = w.current();
    if (br.m_lo > M) break;
    BigInt at = br.m_hi < M ? br.m_hi : M;
    if (at.sign() > 0) {  // m = 0 excluded from D_M
      QuadSurd val = QuadSurd(at + BigInt(1)) * br.gap;
      if (best < val) best = val;
    }
    if (br.m_hi >= M) break;
    w.advance();
  }
  return best;
}

EventualBound eventual_bound(const GoldenCF& cf) {
  require_unit_interval(cf, "eventual_bound");
  long N = static_cast<long>(cf.prefix_len());
  auto cs = convergents(cf, N > 0 ? N : 0);
  BigInt kN = cs[static_cast<size_t>(N)].k;
  BigInt kNm1 = N >= 1 ? cs[static_cast<size_t>(N - 1)].k : BigInt(0);
  BigInt sum = kN + kNm1;
  QuadSurd tail_const(BigInt(5), BigInt(2), BigInt(1));  // 5 + 2 sqrt5
  long d0 = 1;
  while (!(QuadSurd(fibonacci(d0 + 1)) * tail_const > QuadSurd(sum))) ++d0;
  EventualBound out;
  out.d0 = d0;
  auto cs2 = convergents(cf, N + d0 + 1);
  out.certified = cs2[static_cast<size_t>(N + d0)].k + cs2[static_cast<size_t>(N + d0 + 1)].k -
                  BigInt(1);

  // scan for the last violating m <= certified; within a bracket the scaled
  // gap grows with m, so only each bracket's clipped right end can be the
  // last violator
  QuadSurd rho = QuadSurd::rho();
  BigInt last_violator(0);
  bool any = false;
  BracketWalker w(cf);
  while (true) {
    const Bracket& br = w.current();
    if (br.m_lo > out.certified) break;
    BigInt at = br.m_hi < out.certified ? br.m_hi : out.certified;
    if (at.sign() > 0) {
      QuadSurd val = QuadSurd(at + BigInt(1)) * br.gap;
      if (!(val < rho)) {
        any = true;
        last_violator = at;
      }
    }
    if (br.m_hi >= out.certified) break;
    w.advance();
  }
  out.empirical = any ? last_violator + BigInt(1) : BigInt(1);
  return out;
}

bool no_violation_in(const GoldenCF& cf, const BigInt& lo, const BigInt& hi) {
  QuadSurd rho = QuadSurd::rho();
  BracketWalker w(cf);
  while (true) {
    const Bracket& br = w.current();
    if (br.m_lo > hi) break;
    if (br.m_hi >= lo) {
      BigInt at = br.m_hi < hi ? br.m_hi : hi;
      if (at >= lo && at.sign() > 0) {
        QuadSurd val = QuadSurd(at + BigInt(1)) * br.gap;
        if (!(val < rho)) return false;
      }
    }
    if (br.m_hi >= hi) break;
    w.advance();
  }
  return true;
}

}  // namespace circlegap
