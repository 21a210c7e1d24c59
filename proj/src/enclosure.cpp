#include "hurwitz/enclosure.hpp"

#include <algorithm>

namespace hurwitz {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("interval division by an interval containing 0");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

namespace {

Integer pow2(unsigned long k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// bounds on atanh(t) = sum t^(2k+1)/(2k+1) for 0 <= t <= 1/3
Interval atanh_enclosure(const Rational& t_lo, const Rational& t_hi, unsigned p) {
  const unsigned work = p + 8;
  Rational lo_sum = 0, hi_sum = 0;
  Rational pw_lo = t_lo, pw_hi = t_hi;
  const Rational sq_lo = round_down(t_lo * t_lo, work);
  const Rational sq_hi = round_up(t_hi * t_hi, work);
  const Rational eps = Rational(1, 1) / pow2(p);
  for (unsigned long k = 0;; ++k) {
    const unsigned long d = 2 * k + 1;
    lo_sum += round_down(pw_lo / d, work);
    hi_sum += round_up(pw_hi / d, work);
    pw_lo = round_down(pw_lo * sq_lo, work);
    pw_hi = round_up(pw_hi * sq_hi, work);
    if (pw_hi < eps) {
      // remaining terms <= pw_hi / (d + 2) / (1 - t^2), and t^2 <= 1/9
      hi_sum += round_up(pw_hi * Rational(9, 8) / (d + 2), work);
      break;
    }
  }
  return {lo_sum, hi_sum};
}

Interval ln2_enclosure(unsigned p) {
  Interval a = atanh_enclosure(Rational(1, 3), Rational(1, 3), p);
  return {2 * a.lo, 2 * a.hi};
}

}  // namespace

Rational round_down(const Rational& x, unsigned bits) {
  Integer s = pow2(bits);
  return make_rational(floor_div(x.get_num() * s, x.get_den()), s);
}

Rational round_up(const Rational& x, unsigned bits) {
  Integer s = pow2(bits);
  return make_rational(ceil_div(x.get_num() * s, x.get_den()), s);
}

long floor_log2(const Rational& x) {
  if (x <= 0) throw std::domain_error("log of a non-positive number");
  long k = static_cast<long>(mpz_sizeinbase(x.get_num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den().get_mpz_t(), 2));
  auto two_pow = [](long e) {
    return e >= 0 ? Rational(pow2(static_cast<unsigned long>(e))) : Rational(Integer(1), pow2(static_cast<unsigned long>(-e)));
  };
  while (two_pow(k) > x) --k;
  while (two_pow(k + 1) <= x) ++k;
  return k;
}

Interval sqrt_enclosure(const Rational& x, unsigned bits) {
  if (x < 0) throw std::domain_error("sqrt of a negative number");
  const Integer& n = x.get_num();
  const Integer& d = x.get_den();
  Integer scale = pow2(bits);
  Integer radicand = n * d * scale * scale;
  Integer s;
  mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  Integer den = d * scale;
  Rational lo = make_rational(s, den);
  if (s * s == radicand) return {lo, lo};
  return {lo, make_rational(s + 1, den)};
}

Interval ln_enclosure(const Rational& x, unsigned bits) {
  if (x <= 0) throw std::domain_error("log of a non-positive number");
  if (x == 1) return Interval::point(0);
  if (x < 1) return -ln_enclosure(Rational(1) / x, bits);
  const long e = floor_log2(x);
  // x = 2^e m with 1 <= m < 2, so t = (m-1)/(m+1) lies in [0, 1/3)
  const unsigned p = bits + 16 + static_cast<unsigned>(mpz_sizeinbase(Integer(e + 1).get_mpz_t(), 2));
  Rational m = x / Rational(pow2(static_cast<unsigned long>(e)));
  Rational t = (m - 1) / (m + 1);
  Interval a = atanh_enclosure(round_down(t, p + 8), round_up(t, p + 8), p);
  Interval ln2 = ln2_enclosure(p);
  Rational ee(e);
  return {2 * a.lo + ee * ln2.lo, 2 * a.hi + ee * ln2.hi};
}

Interval ln_enclosure(const Interval& x, unsigned bits) {
  return {ln_enclosure(x.lo, bits).lo, ln_enclosure(x.hi, bits).hi};
}

namespace {

std::string render_scaled(const Integer& scaled, unsigned digits) {
  std::string sign = scaled < 0 ? "-" : "";
  std::string body = Integer(abs(scaled)).get_str();
  if (digits == 0) return sign + body;
  if (body.size() <= digits) body = std::string(digits + 1 - body.size(), '0') + body;
  return sign + body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
}

Integer pow10(unsigned d) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, d);
  return r;
}

}  // namespace

std::string decimal_down(const Rational& x, unsigned digits) {
  return render_scaled(floor_div(x.get_num() * pow10(digits), x.get_den()), digits);
}

std::string decimal_up(const Rational& x, unsigned digits) {
  return render_scaled(ceil_div(x.get_num() * pow10(digits), x.get_den()), digits);
}

}  // namespace hurwitz
