#include "hurwitz/gaussian.hpp"

#include <cctype>
#include <ostream>

namespace hurwitz {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor(const Rational& x) { return floor_div(x.get_num(), x.get_den()); }

Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
  if (o.im == 0) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  Integer r = re * o.re - im * o.im;
  Integer i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianInt pow(const GaussianInt& base, unsigned long exponent) {
  GaussianInt result(1);
  GaussianInt b = base;
  while (exponent > 0) {
    if (exponent & 1UL) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

Integer sup_norm(const GaussianInt& z) {
  Integer a = abs(z.re);
  Integer b = abs(z.im);
  return a > b ? a : b;
}

GaussianInt to_gaussian(Unit u) {
  switch (u) {
    case Unit::One: return GaussianInt(1, 0);
    case Unit::I: return GaussianInt(0, 1);
    case Unit::MinusOne: return GaussianInt(-1, 0);
    case Unit::MinusI: return GaussianInt(0, -1);
  }
  return GaussianInt(1, 0);
}

Unit inverse(Unit u) {
  switch (u) {
    case Unit::I: return Unit::MinusI;
    case Unit::MinusI: return Unit::I;
    default: return u;
  }
}

Unit unit_of(const GaussianInt& z) {
  if (z == GaussianInt(1)) return Unit::One;
  if (z == GaussianInt(-1)) return Unit::MinusOne;
  if (z == GaussianInt(0, 1)) return Unit::I;
  if (z == GaussianInt(0, -1)) return Unit::MinusI;
  throw std::invalid_argument("not a unit: " + to_string(z));
}

Unit normalizing_unit(const GaussianInt& z) {
  if (z.is_zero()) return Unit::One;
  // quadrants rotate by i: (re>0, im>=0) <- z, (re<=0, im>0) <- z*(-i), ...
  if (z.re > 0 && z.im >= 0) return Unit::One;
  if (z.re <= 0 && z.im > 0) return Unit::MinusI;
  if (z.re < 0 && z.im <= 0) return Unit::MinusOne;
  return Unit::I;
}

GaussianInt canonical_associate(const GaussianInt& z) { return z * to_gaussian(normalizing_unit(z)); }

GaussianInt nearest_quotient(const GaussianInt& num, const GaussianInt& den) {
  Integer m = den.norm();
  if (m == 0) throw std::domain_error("division by zero");
  Integer x = num.re * den.re + num.im * den.im;
  Integer y = num.im * den.re - num.re * den.im;
  Integer two_m = 2 * m;
  return GaussianInt(floor_div(2 * x + m, two_m), floor_div(2 * y + m, two_m));
}

GaussianInt nearest_remainder(const GaussianInt& a, const GaussianInt& b) {
  return a - nearest_quotient(a, b) * b;
}

bool divides(const GaussianInt& d, const GaussianInt& a) {
  if (d.is_zero()) return a.is_zero();
  Integer m = d.norm();
  Integer x = a.re * d.re + a.im * d.im;
  Integer y = a.im * d.re - a.re * d.im;
  return mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) && mpz_divisible_p(y.get_mpz_t(), m.get_mpz_t());
}

GaussianInt exact_div(const GaussianInt& a, const GaussianInt& d) {
  if (d.is_zero()) throw std::domain_error("division by zero");
  if (d.im == 0) {
    if (!mpz_divisible_p(a.re.get_mpz_t(), d.re.get_mpz_t()) ||
        !mpz_divisible_p(a.im.get_mpz_t(), d.re.get_mpz_t()))
      throw std::domain_error("inexact Gaussian division");
    GaussianInt q;
    mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), d.re.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), d.re.get_mpz_t());
    return q;
  }
  Integer m = d.norm();
  Integer x = a.re * d.re + a.im * d.im;
  Integer y = a.im * d.re - a.re * d.im;
  if (!mpz_divisible_p(x.get_mpz_t(), m.get_mpz_t()) || !mpz_divisible_p(y.get_mpz_t(), m.get_mpz_t()))
    throw std::domain_error("inexact Gaussian division");
  GaussianInt q;
  mpz_divexact(q.re.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  mpz_divexact(q.im.get_mpz_t(), y.get_mpz_t(), m.get_mpz_t());
  return q;
}

GaussianInt gauss_gcd(const GaussianInt& a, const GaussianInt& b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd undefined");
  GaussianInt x = a;
  GaussianInt y = b;
  while (!y.is_zero()) {
    GaussianInt r = nearest_remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(x);
}

GaussianRational::GaussianRational(const GaussianInt& num, const GaussianInt& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    num_ = GaussianInt(0);
    den_ = GaussianInt(1);
    return;
  }
  GaussianInt g = gauss_gcd(num, den);
  if (g == GaussianInt(1)) {
    num_ = num;
    den_ = den;
  } else {
    num_ = exact_div(num, g);
    den_ = exact_div(den, g);
  }
  GaussianInt u = to_gaussian(normalizing_unit(den_));
  num_ *= u;
  den_ *= u;
}

GaussianRational GaussianRational::from_coprime(const GaussianInt& num, const GaussianInt& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return GaussianRational();
  GaussianInt u = to_gaussian(normalizing_unit(den));
  return GaussianRational(num * u, den * u, Trusted{});
}

Rational GaussianRational::re() const {
  return make_rational(num_.re * den_.re + num_.im * den_.im, den_.norm());
}

Rational GaussianRational::im() const {
  return make_rational(num_.im * den_.re - num_.re * den_.im, den_.norm());
}

Rational GaussianRational::norm() const { return make_rational(num_.norm(), den_.norm()); }

GaussianRational GaussianRational::reciprocal() const {
  if (num_.is_zero()) throw std::domain_error("reciprocal of zero");
  return from_coprime(den_, num_);
}

GaussianRational GaussianRational::conj() const { return from_coprime(num_.conj(), den_.conj()); }

GaussianRational GaussianRational::operator-() const { return GaussianRational(-num_, den_, Trusted{}); }

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  if (a.den_ == b.den_) return GaussianRational(a.num_ + b.num_, a.den_);
  return GaussianRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) { return a + (-b); }

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return GaussianRational(a.num_ * b.num_, a.den_ * b.den_);
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return GaussianRational(a.num_ * b.den_, a.den_ * b.num_);
}

GaussianInt nearest_gaussian(const GaussianRational& z) { return nearest_quotient(z.num(), z.den()); }

bool in_fundamental_domain(const GaussianInt& num, const GaussianInt& den) {
  Integer m = den.norm();
  if (m == 0) throw std::domain_error("zero denominator");
  Integer x2 = 2 * (num.re * den.re + num.im * den.im);
  Integer y2 = 2 * (num.im * den.re - num.re * den.im);
  return -m <= x2 && x2 < m && -m <= y2 && y2 < m;
}

bool in_fundamental_domain(const GaussianRational& z) { return in_fundamental_domain(z.num(), z.den()); }

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) { return x.get_str(); }

std::string to_string(const GaussianInt& z) {
  if (z.im == 0) return z.re.get_str();
  std::string imag;
  Integer a = abs(z.im);
  if (a != 1) imag = a.get_str();
  imag += 'i';
  if (z.re == 0) return (z.im < 0 ? "-" : "") + imag;
  return z.re.get_str() + (z.im < 0 ? "-" : "+") + imag;
}

std::string to_string(const GaussianRational& z) {
  if (z.is_gaussian_integer()) return to_string(z.num());
  return to_string(z.num()) + " / " + to_string(z.den());
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << to_string(z); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  char take() { return s_[pos_++]; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(s_) + "': " + what);
  }

  Integer digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  // sum of signed terms: integer, integer 'i', or 'i'
  GaussianInt literal(int* terms) {
    GaussianInt z;
    *terms = 0;
    while (true) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
      } else if (*terms > 0) {
        break;
      }
      Integer magnitude(1);
      bool has_digits = std::isdigit(static_cast<unsigned char>(peek())) != 0;
      if (has_digits) magnitude = digits();
      if (accept('i')) {
        z.im += sign * magnitude;
      } else {
        if (!has_digits) fail("expected a number or 'i'");
        z.re += sign * magnitude;
      }
      ++*terms;
    }
    if (*terms == 0) fail("empty Gaussian integer");
    return z;
  }

  GaussianInt factor() {
    skip_space();
    GaussianInt base;
    int terms = 1;
    if (accept('(')) {
      skip_space();
      int inner = 0;
      base = literal(&inner);
      skip_space();
      if (!accept(')')) fail("expected ')'");
    } else {
      base = literal(&terms);
    }
    skip_space();
    if (accept('^')) {
      if (terms > 1) fail("parenthesize a compound base before '^'");
      skip_space();
      Integer e = digits();
      if (!e.fits_ulong_p()) fail("exponent too large");
      base = pow(base, e.get_ui());
      skip_space();
    }
    return base;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

GaussianInt parse_gaussian_int(std::string_view text) {
  Cursor c(text);
  GaussianInt z = c.factor();
  c.skip_space();
  if (!c.done()) c.fail("trailing characters");
  return z;
}

GaussianRational parse_gaussian_rational(std::string_view text) {
  Cursor c(text);
  GaussianInt num = c.factor();
  GaussianInt den(1);
  c.skip_space();
  if (c.accept('/')) den = c.factor();
  c.skip_space();
  if (!c.done()) c.fail("trailing characters");
  if (den.is_zero()) c.fail("zero denominator");
  return GaussianRational(num, den);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto dot = s.find('.');
  try {
    if (slash != std::string::npos) {
      Integer n(s.substr(0, slash));
      Integer d(s.substr(slash + 1));
      if (d == 0) throw ParseError("zero denominator in '" + s + "'");
      return make_rational(n, d);
    }
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      bool negative = !whole.empty() && whole[0] == '-';
      if (whole.empty() || whole == "-" || whole == "+") whole += "0";
      Integer w(whole);
      Integer f(frac.empty() ? "0" : frac);
      Integer scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      Integer n = abs(w) * scale + f;
      return make_rational(negative ? Integer(-n) : n, scale);
    }
    return Rational(Integer(s));
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse rational '" + s + "'");
  }
}

}  // namespace hurwitz
