#pragma once

#include <string>

#include "circlegap/contfrac.hpp"

namespace circlegap {

/// A theta argument as given on the command line. Accepted spellings:
///   eta1..eta8           catalog values
///   phi                  the golden point, as its fractional part [0;(1)]
///   [a0;a1,...,(1)]      golden continued fraction (a0 reduced mod 1)
///   p/q or an integer    exact rational
///   surd:a,b,c           (a + b sqrt5)/c
///   pi                   float64 rational approximation of pi (figures only;
///                        gap classifications near exact ties are approximate)
struct ThetaInput {
  enum class Kind { Golden, Rational, Surd };
  Kind kind = Kind::Rational;
  GoldenCF cf;      // Kind::Golden, already shifted to a0 = 0
  Rational rat;     // Kind::Rational
  QuadSurd surd;    // Kind::Surd
  std::string name;

  /// The value as an exact field element (fractional part for Golden).
  QuadSurd as_quad() const;
  bool is_golden() const { return kind == Kind::Golden; }
};

ThetaInput parse_theta(const std::string& text);

}  // namespace circlegap
