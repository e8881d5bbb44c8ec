#include "circlegap/theta_input.hpp"

#include <stdexcept>

#include "circlegap/asymptotics.hpp"

namespace circlegap {

QuadSurd ThetaInput::as_quad() const {
  switch (kind) {
    case Kind::Golden:
      return value(cf);
    case Kind::Rational:
      return QuadSurd(rat);
    case Kind::Surd:
      return surd;
  }
  throw std::logic_error("ThetaInput: bad kind");
}

ThetaInput parse_theta(const std::string& text) {
  ThetaInput out;
  out.name = text;
  if (text.size() == 4 && text.compare(0, 3, "eta") == 0 && text[3] >= '1' && text[3] <= '8') {
    out.kind = ThetaInput::Kind::Golden;
    out.cf = eta_catalog()[static_cast<size_t>(text[3] - '1')].cf;
    return out;
  }
  if (text == "phi") {
    out.kind = ThetaInput::Kind::Golden;
    out.cf = GoldenCF(0, {});
    return out;
  }
  if (text == "pi") {
    out.kind = ThetaInput::Kind::Rational;
    out.rat = Rational(BigInt("884279719003555"), BigInt("281474976710656"));
    return out;
  }
  if (!text.empty() && text.front() == '[') {
    out.kind = ThetaInput::Kind::Golden;
    out.cf = parse_cf(text);
    out.cf.a0 = 0;  // the gap function is invariant under integer shifts
    return out;
  }
  if (text.compare(0, 5, "surd:") == 0) {
    std::string rest = text.substr(5);
    size_t c1 = rest.find(','), c2 = rest.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("theta: surd needs three comma-separated integers");
    out.kind = ThetaInput::Kind::Surd;
    out.surd = QuadSurd(BigInt(rest.substr(0, c1)), BigInt(rest.substr(c1 + 1, c2 - c1 - 1)),
                        BigInt(rest.substr(c2 + 1)));
    return out;
  }
  size_t slash = text.find('/');
  if (slash != std::string::npos) {
    out.kind = ThetaInput::Kind::Rational;
    out.rat = Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    return out;
  }
  out.kind = ThetaInput::Kind::Rational;
  out.rat = Rational(BigInt(text));
  return out;
}

}  // namespace circlegap
