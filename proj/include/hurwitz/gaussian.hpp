#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

using Integer = mpz_class;
using Rational = mpq_class;

/// Floor of a/b for b != 0 (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

/// Floor of a rational number.
Integer floor(const Rational& x);

/// Canonical rational: mpq with cancelled common factors.
Rational make_rational(const Integer& num, const Integer& den);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GaussianInt {
  Integer re;
  Integer im;

  GaussianInt() = default;
  GaussianInt(long r) : re(r), im(0) {}  // NOLINT: integers are Gaussian integers
  GaussianInt(long r, long i) : re(r), im(i) {}
  GaussianInt(Integer r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianInt unit_i() { return GaussianInt(0, 1); }

  Integer norm() const { return re * re + im * im; }
  GaussianInt conj() const { return GaussianInt(re, -im); }
  bool is_zero() const { return re == 0 && im == 0; }
  bool is_unit() const { return norm() == 1; }
  bool is_real() const { return im == 0; }

  GaussianInt operator-() const { return GaussianInt(-re, -im); }
  GaussianInt& operator+=(const GaussianInt& o);
  GaussianInt& operator-=(const GaussianInt& o);
  GaussianInt& operator*=(const GaussianInt& o);

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }
};

/// Lexicographic order on (re, im); only used for deterministic containers.
struct GaussianLess {
  bool operator()(const GaussianInt& a, const GaussianInt& b) const {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

GaussianInt pow(const GaussianInt& base, unsigned long exponent);

/// max(|Re|, |Im|)
Integer sup_norm(const GaussianInt& z);

enum class Unit { One, I, MinusOne, MinusI };

GaussianInt to_gaussian(Unit u);
Unit inverse(Unit u);
Unit unit_of(const GaussianInt& z);  // z must be a unit

/// Unit u with u*z in {re > 0, im >= 0}; One for z = 0.
Unit normalizing_unit(const GaussianInt& z);
GaussianInt canonical_associate(const GaussianInt& z);

/// Nearest Gaussian integer to num/den, ties broken as floor(x + 1/2).
GaussianInt nearest_quotient(const GaussianInt& num, const GaussianInt& den);

/// a mod b := a - [a/b] b; norm(a mod b) < norm(b).
GaussianInt nearest_remainder(const GaussianInt& a, const GaussianInt& b);

bool divides(const GaussianInt& d, const GaussianInt& a);

/// Exact quotient a/d; throws if d does not divide a.
GaussianInt exact_div(const GaussianInt& a, const GaussianInt& d);

GaussianInt gauss_gcd(const GaussianInt& a, const GaussianInt& b);

class GaussianRational {
 public:
  GaussianRational() : num_(0), den_(1) {}
  GaussianRational(long n) : num_(n), den_(1) {}  // NOLINT
  GaussianRational(const GaussianInt& n) : num_(n), den_(1) {}  // NOLINT
  GaussianRational(const GaussianInt& num, const GaussianInt& den);

  /// Skips the gcd when the caller knows num and den are coprime
  /// (e.g. convergents); only the denominator associate is normalized.
  static GaussianRational from_coprime(const GaussianInt& num, const GaussianInt& den);

  const GaussianInt& num() const { return num_; }
  const GaussianInt& den() const { return den_; }

  Rational re() const;
  Rational im() const;
  Rational norm() const;  // |z|^2
  bool is_zero() const { return num_.is_zero(); }
  bool is_gaussian_integer() const { return den_ == GaussianInt(1); }

  GaussianRational reciprocal() const;
  GaussianRational conj() const;
  GaussianRational operator-() const;

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

 private:
  struct Trusted {};
  GaussianRational(GaussianInt num, GaussianInt den, Trusted)
      : num_(std::move(num)), den_(std::move(den)) {}
  GaussianInt num_;
  GaussianInt den_;
};

GaussianInt nearest_gaussian(const GaussianRational& z);
bool in_fundamental_domain(const GaussianRational& z);

/// Same test on an unreduced fraction num/den.
bool in_fundamental_domain(const GaussianInt& num, const GaussianInt& den);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);
std::string to_string(const GaussianInt& z);
std::string to_string(const GaussianRational& z);

/// "3", "-i", "2-3i", "(5-6i)", "2^7", "(-2+i)^4"
GaussianInt parse_gaussian_int(std::string_view text);

/// "a+bi / c+di", "10/27", "(5-6i)/(-2+i)^4", plain integers
GaussianRational parse_gaussian_rational(std::string_view text);

Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace hurwitz
