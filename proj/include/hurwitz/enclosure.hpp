#pragma once

#include <string>

#include "hurwitz/gaussian.hpp"

namespace hurwitz {

/// Closed rational interval [lo, hi] known to contain some real number.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool within(const Rational& a, const Rational& b) const { return a <= lo && hi <= b; }
  Rational width() const { return hi - lo; }
  bool positive() const { return lo > 0; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // b must not contain 0

/// sqrt(x), x >= 0, with width <= 2^-bits relative to the denominator scale.
Interval sqrt_enclosure(const Rational& x, unsigned bits);

/// ln(x), x > 0; width about 2^-bits.
Interval ln_enclosure(const Rational& x, unsigned bits);

/// ln(x) for an interval x with lo > 0 (monotone outward rounding).
Interval ln_enclosure(const Interval& x, unsigned bits);

/// floor(log2 x) for x > 0.
long floor_log2(const Rational& x);

/// Round to a dyadic with `bits` fractional bits, downward / upward.
Rational round_down(const Rational& x, unsigned bits);
Rational round_up(const Rational& x, unsigned bits);

/// Decimal rendering truncated (lo rounded down, hi up) to `digits` places.
std::string decimal_down(const Rational& x, unsigned digits);
std::string decimal_up(const Rational& x, unsigned digits);

}  // namespace hurwitz
