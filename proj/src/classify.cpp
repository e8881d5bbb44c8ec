#include "circlegap/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace circlegap {

int prefix_bound(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("prefix_bound: n in [1,5]");
  // (5 + 2 sqrt5)(1 + 1/F_n), exact; the bound is the largest integer
  // strictly below it
  QuadSurd limit = QuadSurd(BigInt(5), BigInt(2), BigInt(1)) *
                   (QuadSurd(BigInt(1)) + QuadSurd(fibonacci(n)).inverse());
  BigInt f = limit.floor();
  if (QuadSurd(f) == limit) f -= BigInt(1);  // cannot happen: limit irrational
  return static_cast<int>(f.to_ll());
}

namespace {

struct PrefixK {
  // k_0..k_5 of [0; a,b,c,d,e]
  std::array<long long, 6> k;
};

PrefixK prefix_convergents(const PrefixTuple& p) {
  PrefixK out;
  out.k[0] = 1;
  long long prev = 0, cur = 1;
  for (int i = 0; i < 5; ++i) {
    long long next = p[static_cast<size_t>(i)] * cur + prev;
    prev = cur;
    cur = next;
    out.k[static_cast<size_t>(i) + 1] = cur;
  }
  return out;
}

// theta as (x + y sqrt5)/z with z > 0
struct Surd {
  BigInt x, y, z;
};

// tails theta_1..theta_6 of [0; a,b,c,d,e, 1...]; theta_6 = phi
std::array<Surd, 6> prefix_tails(const PrefixTuple& p) {
  std::array<Surd, 6> t;
  t[5] = {BigInt(1), BigInt(1), BigInt(2)};  // phi
  for (int i = 4; i >= 0; --i) {
    // theta_i = a_i + 1/theta_{i+1}; 1/((x+y s)/z) = z(x - y s)/(x^2-5y^2)
    const Surd& nxt = t[static_cast<size_t>(i) + 1];
    BigInt norm = nxt.x * nxt.x - BigInt(5) * nxt.y * nxt.y;
    BigInt ix = nxt.z * nxt.x, iy = -(nxt.z * nxt.y);
    if (norm.is_negative()) {
      ix = -ix;
      iy = -iy;
      norm = -norm;
    }
    BigInt a(p[static_cast<size_t>(i)]);
    t[static_cast<size_t>(i)] = {a * norm + ix, iy, norm};
  }
  return t;
}

// sign of (m_hi+1)(theta - alpha) - rho (k_n + k_{n+1} theta), all exact;
// negative means the bracket stays below rho
int bracket_sign(const BigInt& m1, long long alpha, const BigInt& kn, const BigInt& kn1,
                 const Surd& th) {
  BigInt av(alpha);
  BigInt lhs_coeff = th.x - av * th.z;
  BigInt base = kn * th.z + kn1 * th.x;
  BigInt five_m1 = BigInt(5) * m1;
  BigInt A = five_m1 * lhs_coeff - (BigInt(5) * base + BigInt(10) * kn1 * th.y);
  BigInt B = five_m1 * th.y - (BigInt(2) * base + BigInt(5) * kn1 * th.y);
  return sign_with_sqrt5(A, B);
}

}  // namespace

long depth_bound(const PrefixTuple& prefix) {
  PrefixK pk = prefix_convergents(prefix);
  BigInt sum = BigInt(pk.k[5]) + BigInt(pk.k[4]);
  QuadSurd tail_const(BigInt(5), BigInt(2), BigInt(1));
  long d0 = 1;
  while (!(QuadSurd(fibonacci(d0 + 1)) * tail_const > QuadSurd(sum))) ++d0;
  return 5 + d0;
}

CandidateResult check_candidate(const PrefixTuple& prefix, long max_depth) {
  for (int a : prefix)
    if (a < 1) throw std::invalid_argument("check_candidate: quotient < 1");
  long depth = max_depth > 0 ? max_depth : depth_bound(prefix);
  auto tails = prefix_tails(prefix);
  const Surd phi{BigInt(1), BigInt(1), BigInt(2)};

  CandidateResult res;
  BigInt kn(0), kn1(1);  // k(-1), k(0)
  for (long n = -1; n <= depth; ++n) {
    long long a_n2 = n + 2 <= 5 ? prefix[static_cast<size_t>(n + 2) - 1] : 1;
    // tails[i] holds theta_{i+1}, so theta_{n+2} sits at index n+1
    const Surd& th = n + 1 <= 5 ? tails[static_cast<size_t>(n + 1)] : phi;
    for (long long alpha = 0; alpha < a_n2; ++alpha) {
      BigInt m1 = kn + BigInt(alpha + 2) * kn1 - BigInt(1);  // m_hi + 1
      if (m1 <= BigInt(1)) continue;                         // m = 0 excluded
      int s = bracket_sign(m1, alpha, kn, kn1, th);
      if (s > 0) {
        res.pass = false;
        res.violating_m = m1 - BigInt(1);
        return res;
      }
      if (s == 0) res.equality_seen = true;
    }
    BigInt knext = BigInt(a_n2) * kn1 + kn;
    kn = std::move(kn1);
    kn1 = std::move(knext);
  }
  res.pass = true;

  // margin pass, survivors only: min over brackets of rho - (m_hi+1) gap
  QuadSurd rho = QuadSurd::rho();
  std::vector<long long> quot(prefix.begin(), prefix.end());
  GoldenCF cf(0, quot);
  BracketWalker w(cf);
  std::optional<QuadSurd> worst;
  while (w.current().n <= depth) {
    const Bracket& br = w.current();
    if (br.m_hi.sign() > 0) {
      QuadSurd margin = rho - QuadSurd(br.m_hi + BigInt(1)) * br.gap;
      if (!worst || margin < *worst) worst = margin;
    }
    w.advance();
  }
  res.worst_margin = std::move(worst);
  return res;
}

bool check_candidate_float(const PrefixTuple& prefix, long max_depth) {
  long depth = max_depth > 0 ? max_depth : depth_bound(prefix);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double rho = 1.0 + 2.0 / std::sqrt(5.0);
  double kn = 0.0, kn1 = 1.0;
  for (long n = -1; n <= depth; ++n) {
    long long a_n2 = n + 2 <= 5 ? prefix[static_cast<size_t>(n + 2) - 1] : 1;
    double theta_n2 = phi;
    for (long i = 5; i >= n + 2; --i)
      theta_n2 = static_cast<double>(i >= 1 && i <= 5 ? prefix[static_cast<size_t>(i) - 1] : 1) +
                 1.0 / theta_n2;
    for (long long alpha = 0; alpha < a_n2; ++alpha) {
      double m1 = kn + (static_cast<double>(alpha) + 2.0) * kn1 - 1.0;
      if (m1 <= 1.0) continue;
      if (m1 * (theta_n2 - static_cast<double>(alpha)) / (kn1 * theta_n2 + kn) > rho)
        return false;
    }
    double knext = static_cast<double>(a_n2) * kn1 + kn;
    kn = kn1;
    kn1 = knext;
  }
  return true;
}

PrefixTuple reflect_tuple(const PrefixTuple& t) {
  if (t[0] >= 2) {
    if (t[4] != 1)
      throw std::invalid_argument("reflect_tuple: partner needs a 6-term prefix");
    return PrefixTuple{1, t[0] - 1, t[1], t[2], t[3]};
  }
  return PrefixTuple{t[1] + 1, t[2], t[3], t[4], 1};
}

SearchReport search_sharp_set(int jobs) {
  const int A = prefix_bound(1), B = prefix_bound(2), C = prefix_bound(3),
            D = prefix_bound(4), E = prefix_bound(5);
  std::vector<std::vector<PrefixTuple>> per_a(static_cast<size_t>(A));
  std::vector<char> eq_flags(static_cast<size_t>(A), 0);
  std::atomic<int> next_a{1};

  auto worker = [&] {
    for (;;) {
      int a = next_a.fetch_add(1);
      if (a > A) break;
      auto& out = per_a[static_cast<size_t>(a - 1)];
      for (int b = 1; b <= B; ++b)
        for (int c = 1; c <= C; ++c)
          for (int d = 1; d <= D; ++d)
            for (int e = 1; e <= E; ++e) {
              PrefixTuple t{a, b, c, d, e};
              CandidateResult r = check_candidate(t);
              if (r.equality_seen) eq_flags[static_cast<size_t>(a - 1)] = 1;
              if (r.pass) out.push_back(t);
            }
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchReport rep;
  rep.scanned = static_cast<long long>(A) * B * C * D * E;
  for (auto& v : per_a) {
    std::sort(v.begin(), v.end());
    rep.passing.insert(rep.passing.end(), v.begin(), v.end());
  }
  for (const PrefixTuple& t : rep.passing)
    rep.margins.push_back(*check_candidate(t).worst_margin);
  for (char f : eq_flags) rep.any_equality |= (f != 0);

  for (const PrefixTuple& t : rep.passing) {
    if (t[0] < 2) continue;  // reps carry value <= 1/2
    SharpClass cls;
    cls.rep = t;
    cls.partner = reflect_tuple(t);
    std::vector<long long> quot(t.begin(), t.end());
    GoldenCF cf(0, quot);
    cls.val = value(cf);
    cls.matrix = matrix_of(cf);
    rep.classes.push_back(std::move(cls));
  }
  return rep;
}

bool tail_onset_check(const GoldenCF& cf, long N) {
  if (cf.a0 != 0) throw std::invalid_argument("tail_onset_check: requires a0 = 0");
  if (N < 1 || cf.quotient(static_cast<size_t>(N) + 1) <= 1)
    throw std::invalid_argument("tail_onset_check: needs a_{N+1} > 1");
  for (size_t i = static_cast<size_t>(N) + 2; i <= cf.prefix_len(); ++i)
    if (cf.prefix[i - 1] != 1)
      throw std::invalid_argument("tail_onset_check: needs ones after a_{N+1}");
  auto cs = convergents(cf, N + 1);
  BigInt kN = cs[static_cast<size_t>(N)].k;
  BigInt kN1 = cs[static_cast<size_t>(N + 1)].k;
  BigInt kNm1 = N >= 1 ? cs[static_cast<size_t>(N - 1)].k : BigInt(0);
  QuadSurd thN1 = tail(cf, N + 1);
  QuadSurd lhs = QuadSurd(BigInt(2) * kN1 + kN - BigInt(1));
  QuadSurd rhs = QuadSurd::rho() * (thN1 * QuadSurd(kN) + QuadSurd(kNm1));
  return !(lhs < rhs);
}

std::optional<BigInt> first_violation(const GoldenCF& cf, long max_depth) {
  QuadSurd rho = QuadSurd::rho();
  BracketWalker w(cf);
  while (w.current().n <= max_depth) {
    const Bracket& br = w.current();
    if (br.m_hi.sign() > 0) {
      QuadSurd val = QuadSurd(br.m_hi + BigInt(1)) * br.gap;
      if (!(val < rho)) {
        // violators form a suffix of the bracket; find its first m
        BigInt lo = br.m_lo.sign() > 0 ? br.m_lo : BigInt(1);
        BigInt hi = br.m_hi;
        while (lo < hi) {
          BigInt mid = (lo + hi) / BigInt(2);
          QuadSurd v = QuadSurd(mid + BigInt(1)) * br.gap;
          if (v < rho)
            lo = mid + BigInt(1);
          else
            hi = mid;
        }
        return lo;
      }
    }
    w.advance();
  }
  return std::nullopt;
}

}  // namespace circlegap
