#include "hurwitz/hcf.hpp"

#include <array>

namespace hurwitz {

bool digit_in_alphabet(const GaussianInt& d) { return d.norm() > 1; }

HcfExpansion hcf_expand(const GaussianInt& num, const GaussianInt& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  HcfExpansion out;
  out.integer_part = nearest_quotient(num, den);
  GaussianInt prev = den;
  GaussianInt cur = num - out.integer_part * den;
  // each Gauss step at least halves the denominator norm
  const size_t cap = mpz_sizeinbase(den.norm().get_mpz_t(), 2) + 8;
  while (!cur.is_zero()) {
    if (out.digits.size() > cap) throw std::logic_error("non-termination suspected in hcf_expand");
    GaussianInt a = nearest_quotient(prev, cur);
    GaussianInt rem = prev - a * cur;
    if (!(rem.norm() < cur.norm())) throw std::logic_error("hcf_expand: remainder norm did not decrease");
    if (!digit_in_alphabet(a)) throw std::logic_error("hcf_expand: digit outside the alphabet");
    if (!rem.is_zero() && !in_fundamental_domain(rem, cur))
      throw std::logic_error("hcf_expand: orbit left the fundamental domain");
    out.digits.push_back(std::move(a));
    prev = std::move(cur);
    cur = std::move(rem);
  }
  return out;
}

HcfExpansion hcf_expand(const GaussianRational& z) { return hcf_expand(z.num(), z.den()); }

namespace {

GaussianInt times_i_power(const GaussianInt& z, int k) {
  GaussianInt r = z;
  for (int j = 0; j < ((k % 4) + 4) % 4; ++j) r = GaussianInt(-r.im, r.re);
  return r;
}

bool row_allows(SuccessorRow row, bool second_form, const GaussianInt& w) {
  if (!digit_in_alphabet(w)) return false;
  switch (row) {
    case SuccessorRow::Unrestricted: return true;
    case SuccessorRow::OnePlusI: return w.re >= 0 && w.im <= 0;
    case SuccessorRow::Two: return w.re >= 0;
    case SuccessorRow::TwoPlusI:
      if (second_form) return w.re >= 0;
      return w != GaussianInt(-1, 1);
  }
  return false;
}

GaussianInt representative(SuccessorRow row) {
  switch (row) {
    case SuccessorRow::OnePlusI: return GaussianInt(1, 1);
    case SuccessorRow::Two: return GaussianInt(2, 0);
    case SuccessorRow::TwoPlusI: return GaussianInt(2, 1);
    default: return GaussianInt(0);
  }
}

}  // namespace

GaussianInt SuccessorRule::pull_back(const GaussianInt& next) const {
  GaussianInt w = times_i_power(next, rotation);
  return conjugated ? w.conj() : w;
}

bool SuccessorRule::allows(const GaussianInt& next) const { return row_allows(row, false, pull_back(next)); }

bool SuccessorRule::allows_second_form(const GaussianInt& next) const {
  return row_allows(row, two_branch, pull_back(next));
}

std::string SuccessorRule::describe() const {
  std::string base;
  switch (row) {
    case SuccessorRow::Unrestricted: return "all digits";
    case SuccessorRow::OnePlusI: base = "Re(w) >= 0 >= Im(w)"; break;
    case SuccessorRow::Two: base = "Re(w) >= 0"; break;
    case SuccessorRow::TwoPlusI: base = "w != -1+i, or Re(w) >= 0 (second form)"; break;
  }
  std::string w = "w = ";
  w += conjugated ? "conj(i^" + std::to_string(rotation) + " a')" : "i^" + std::to_string(rotation) + " a'";
  return base + " where " + w + " (representative " + to_string(representative(row)) + ")";
}

SuccessorRule allowed_successors(const GaussianInt& a) {
  if (!digit_in_alphabet(a)) throw std::invalid_argument("allowed_successors: digit " + to_string(a) + " is not in D");
  SuccessorRule rule;
  rule.digit = a;
  Integer n = a.norm();
  if (sup_norm(a) >= 3 || n == 8) return rule;
  rule.row = n == 2 ? SuccessorRow::OnePlusI : n == 4 ? SuccessorRow::Two : SuccessorRow::TwoPlusI;
  rule.two_branch = rule.row == SuccessorRow::TwoPlusI;
  const GaussianInt rep = representative(rule.row);
  for (int conj = 0; conj < 2; ++conj) {
    for (int k = 0; k < 4; ++k) {
      GaussianInt image = times_i_power(conj ? rep.conj() : rep, k);
      if (image == a) {
        rule.rotation = k;
        rule.conjugated = conj != 0;
        return rule;
      }
    }
  }
  throw std::logic_error("allowed_successors: no symmetry maps the digit to a row");
}

std::span<const PrintedRow> printed_successor_table() {
  static const std::array<PrintedRow, 5> rows = {{
      {GaussianInt(3), "max(|Re a_n|,|Im a_n|) >= 3 : D", 1},
      {GaussianInt(1, 1), "1+i : {Im(a') < 0 < Re(a')}", 1},
      {GaussianInt(2), "2 : {Re(a') >= 0}", 1},
      {GaussianInt(2, 1), "2+i : D minus {-1+i}, or {Re(a') >= 0}", 2},
      {GaussianInt(-1, 2), "-1+2i : D minus {1+i}, or {Re(a') <= 0}", 2},
  }};
  return rows;
}

bool printed_row_allows(size_t row, int branch, const GaussianInt& w) {
  if (!digit_in_alphabet(w)) return false;
  switch (row) {
    case 0: return true;
    case 1: return w.im < 0 && 0 < w.re;
    case 2: return w.re >= 0;
    case 3: return branch == 0 ? w != GaussianInt(-1, 1) : w.re >= 0;
    case 4: return branch == 0 ? w != GaussianInt(1, 1) : w.re <= 0;
    default: throw std::out_of_range("printed_row_allows: no such row");
  }
}

bool is_reversible_real(std::span<const GaussianInt> digits) {
  for (const auto& a : digits)
    if (!a.is_real()) throw std::invalid_argument("rule applies to real-integer sequences only");
  for (size_t k = 1; k < digits.size(); ++k) {
    if (abs(digits[k].re) == 2 && !(digits[k - 1].re * digits[k].re > 0)) return false;
  }
  return true;
}

namespace {

struct SandwichCheck {
  Interval lower, upper;
};

SandwichCheck sandwich_enclosures(const Integer& q_norm, const Integer& c_norm, unsigned bits) {
  Interval s2 = sqrt_enclosure(Rational(2), bits);
  Interval c = sqrt_enclosure(Rational(c_norm), bits);
  Interval q = Interval::point(Rational(q_norm));
  Interval two = Interval::point(2), four = Interval::point(4);
  Interval half_s2{s2.lo / 2, s2.hi / 2};
  Interval lower = two / ((two + s2) * q * (c + half_s2));
  Interval upper = four / ((two - s2) * c * q);
  return {lower, upper};
}

}  // namespace

SandwichBounds error_sandwich(const GaussianRational& z, const ConvergentTable& table, long n,
                              const GaussianInt& c_next) {
  if (n < 0 || n > table.last_index()) throw std::out_of_range("error_sandwich: index out of range");
  const GaussianInt& q = table.q(n);
  if (q.is_zero()) throw std::domain_error("error_sandwich: q_n = 0");
  if (c_next.is_zero()) throw std::invalid_argument("error_sandwich: c_{n+1} must be nonzero");
  SandwichBounds out;
  out.distance_sq = (z - GaussianRational(table.p(n), q)).norm();
  const Integer qn = q.norm();
  const Rational& d2 = out.distance_sq;
  out.hurwitz_holds = d2 * Rational(qn * qn) < 1;
  for (unsigned bits = 32; bits <= 1024; bits *= 2) {
    SandwichCheck e = sandwich_enclosures(qn, c_next.norm(), bits);
    out.lower = e.lower;
    out.upper = e.upper;
    // decided once the exact distance is outside each enclosure's open span
    bool lower_decided = d2 >= e.lower.hi * e.lower.hi || d2 < e.lower.lo * e.lower.lo;
    bool upper_decided = d2 <= e.upper.lo * e.upper.lo || d2 > e.upper.hi * e.upper.hi;
    out.lower_holds = d2 >= e.lower.hi * e.lower.hi;
    out.upper_holds = d2 <= e.upper.lo * e.upper.lo;
    if (lower_decided && upper_decided) break;
  }
  return out;
}

bool convergent_detector(const GaussianRational& z, const GaussianInt& p, const GaussianInt& q) {
  if (q.is_zero()) throw std::domain_error("convergent_detector: q = 0");
  GaussianRational target(p, q);
  HcfExpansion e = hcf_expand(z);
  ConvergentTable table(e.as_cf());
  bool found = false;
  for (long n = 0; n <= table.last_index() && !found; ++n)
    found = GaussianRational(table.p(n), table.q(n)) == target;
  const Integer qn = q.norm();
  const bool close = (z - target).norm() * Rational(16 * qn * qn) < 1;
  if (close && !found)
    throw std::logic_error("convergent_detector: p/q is within 1/(4|q|^2) of z but is not a convergent");
  return found;
}

}  // namespace hurwitz
