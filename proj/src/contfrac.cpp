#include "circlegap/contfrac.hpp"

#include <cstdlib>
#include <stdexcept>

namespace circlegap {

GoldenCF::GoldenCF(long long a0_, std::vector<long long> prefix_)
    : a0(a0_), prefix(std::move(prefix_)) {
  for (long long a : prefix)
    if (a < 1) throw std::invalid_argument("GoldenCF: partial quotient < 1");
}

QuadSurd value(const GoldenCF& cf) {
  // value = (h_N * theta_{N+1} + h_{N-1}) / (k_N * theta_{N+1} + k_{N-1}),
  // theta_{N+1} = phi
  BigInt h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
  for (size_t i = 0; i <= cf.prefix_len(); ++i) {
    BigInt a(cf.quotient(i));
    BigInt h = a * h_prev + h_prev2;
    BigInt k = a * k_prev + k_prev2;
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  QuadSurd phi = QuadSurd::phi();
  return (QuadSurd(h_prev) * phi + QuadSurd(h_prev2)) /
         (QuadSurd(k_prev) * phi + QuadSurd(k_prev2));
}

std::vector<Convergent> convergents(const GoldenCF& cf, long n) {
  if (n < 0) throw std::invalid_argument("convergents: n must be >= 0");
  std::vector<Convergent> out;
  out.reserve(static_cast<size_t>(n) + 1);
  BigInt h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
  for (long i = 0; i <= n; ++i) {
    BigInt a(cf.quotient(static_cast<size_t>(i)));
    BigInt h = a * h_prev + h_prev2;
    BigInt k = a * k_prev + k_prev2;
    out.push_back({h, k, i});
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  return out;
}

QuadSurd tail(const GoldenCF& cf, long n) {
  if (n < 0) throw std::invalid_argument("tail: n must be >= 0");
  QuadSurd t = QuadSurd::phi();  // theta_{N+1}
  long N = static_cast<long>(cf.prefix_len());
  if (n > N) return t;
  for (long i = N; i >= n; --i)
    t = QuadSurd(BigInt(cf.quotient(static_cast<size_t>(i)))) + t.inverse();
  return t;
}

Rational reversed_fraction(const GoldenCF& cf, long n) {
  if (n < 0) throw std::invalid_argument("reversed_fraction: n must be >= 0");
  // [a_{n+1}, a_n, ..., a_1] folded from the bottom
  Rational x(BigInt(cf.quotient(1)));
  for (long i = 2; i <= n + 1; ++i)
    x = Rational(BigInt(cf.quotient(static_cast<size_t>(i)))) + x.inverse();
  return x;
}

QuadSurd moebius(const GLMatrix& M, const QuadSurd& x) {
  QuadSurd den = QuadSurd(M.r) * x + QuadSurd(M.s);
  if (den.is_zero()) throw std::domain_error("moebius: pole");
  return (QuadSurd(M.p) * x + QuadSurd(M.q)) / den;
}

bool ones_tail_convergent_identity(const GoldenCF& cf, long N, long d) {
  if (N < 0 || d < 0) throw std::invalid_argument("ones_tail_convergent_identity");
  for (size_t i = static_cast<size_t>(N) + 1; i <= static_cast<size_t>(N + d); ++i)
    if (cf.quotient(i) != 1) return false;
  auto cs = convergents(cf, N + d);
  BigInt kN = cs[static_cast<size_t>(N)].k;
  BigInt kNm1 = N >= 1 ? cs[static_cast<size_t>(N) - 1].k : BigInt(0);
  BigInt expect = fibonacci(d + 1) * kN + fibonacci(d) * kNm1;
  return cs[static_cast<size_t>(N + d)].k == expect;
}

QuadSurd monotone_eval(long n, const QuadSurd& x) {
  if (x.sign() <= 0) throw std::invalid_argument("monotone_eval: x must be positive");
  return (QuadSurd(fibonacci(n + 2)) * x + QuadSurd(fibonacci(n + 1))) /
         (QuadSurd(fibonacci(n + 1)) * x + QuadSurd(fibonacci(n)));
}

GoldenCF reflect(const GoldenCF& cf) {
  if (cf.a0 != 0) throw std::invalid_argument("reflect: requires a0 = 0");
  std::vector<long long> p;
  if (cf.quotient(1) >= 2) {
    // [0;a1,a2,...] -> [0;1,a1-1,a2,...]
    p.push_back(1);
    p.push_back(cf.quotient(1) - 1);
    for (size_t i = 2; i <= cf.prefix_len(); ++i) p.push_back(cf.prefix[i - 1]);
  } else {
    // [0;1,a2,a3,...] -> [0;a2+1,a3,...]
    p.push_back(cf.quotient(2) + 1);
    for (size_t i = 3; i <= cf.prefix_len(); ++i) p.push_back(cf.prefix[i - 1]);
  }
  return GoldenCF(0, std::move(p));
}

GoldenCF minimal_form(const GoldenCF& cf) {
  GoldenCF out = cf;
  while (!out.prefix.empty() && out.prefix.back() == 1) out.prefix.pop_back();
  return out;
}

GLMatrix matrix_of(const GoldenCF& cf) {
  GoldenCF min = minimal_form(cf);
  BigInt h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
  for (size_t i = 0; i <= min.prefix_len(); ++i) {
    BigInt a(min.quotient(i));
    BigInt h = a * h_prev + h_prev2;
    BigInt k = a * k_prev + k_prev2;
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  return GLMatrix{h_prev, h_prev2, k_prev, k_prev2};
}

std::string to_text(const GoldenCF& cf) {
  std::string out = "[" + std::to_string(cf.a0) + ";";
  for (long long a : cf.prefix) out += std::to_string(a) + ",";
  out += "(1)]";
  return out;
}

GoldenCF parse_cf(const std::string& text) {
  size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("parse_cf: bad form: " + text); };
  if (i >= text.size() || text[i] != '[') fail();
  ++i;
  auto read_int = [&]() -> long long {
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail();
    return std::strtoll(text.substr(start, i - start).c_str(), nullptr, 10);
  };
  long long a0 = read_int();
  if (i >= text.size() || text[i] != ';') fail();
  ++i;
  std::vector<long long> prefix;
  while (true) {
    if (text.compare(i, 3, "(1)") == 0) {
      i += 3;
      break;
    }
    prefix.push_back(read_int());
    if (i >= text.size() || text[i] != ',') fail();
    ++i;
  }
  if (i >= text.size() || text[i] != ']' || i + 1 != text.size()) fail();
  return GoldenCF(a0, std::move(prefix));
}

}  // namespace circlegap
