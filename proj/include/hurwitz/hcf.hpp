#pragma once

#include <optional>
#include <span>
#include <string>

#include "hurwitz/continued_fraction.hpp"
#include "hurwitz/enclosure.hpp"

namespace hurwitz {

struct HcfExpansion {
  GaussianInt integer_part;
  Digits digits;

  CfSequence as_cf() const { return {integer_part, digits}; }
  friend bool operator==(const HcfExpansion& a, const HcfExpansion& b) {
    return a.integer_part == b.integer_part && a.digits == b.digits;
  }
};

HcfExpansion hcf_expand(const GaussianRational& z);

/// Works on an unreduced fraction; the Euclidean remainders are the orbit.
HcfExpansion hcf_expand(const GaussianInt& num, const GaussianInt& den);

/// d not in {0, 1, i, -1, -i}
bool digit_in_alphabet(const GaussianInt& d);

enum class SuccessorRow {
  Unrestricted,  // F_1(a) is the whole open square: max(|Re|,|Im|) >= 3 or |a|^2 = 8
  OnePlusI,      // |a|^2 = 2
  Two,           // |a|^2 = 4
  TwoPlusI,      // |a|^2 = 5 (includes -1+2i = i(2+i))
};

/// Allowed a_{n+1} after a_n = digit. The row is stated for a
/// representative r; digit = i^k r or i^k conj(r), and the successor
/// transforms with the inverse rotation (T(iz) = -i T(z)).
struct SuccessorRule {
  GaussianInt digit;
  SuccessorRow row = SuccessorRow::Unrestricted;
  int rotation = 0;
  bool conjugated = false;
  bool two_branch = false;

  /// Successor allowed when the current prototype set is F_1(digit).
  bool allows(const GaussianInt& next) const;
  /// Second prototype form for |digit|^2 = 5; equals allows() otherwise.
  bool allows_second_form(const GaussianInt& next) const;
  /// Representative coordinates of a successor.
  GaussianInt pull_back(const GaussianInt& next) const;
  std::string describe() const;
};

SuccessorRule allowed_successors(const GaussianInt& a);

/// The successor table exactly as printed in the source literature,
/// transported by "the same power of i on both columns". Kept only to
/// report how it compares with the computed automaton.
struct PrintedRow {
  GaussianInt condition;
  std::string text;
  int branches;
};
std::span<const PrintedRow> printed_successor_table();
/// Printed predicate of row `row` (index into printed_successor_table), branch 0 or 1.
bool printed_row_allows(size_t row, int branch, const GaussianInt& next);

/// For real digits with |a_k| >= 2: every |a_k| = 2 (k >= 2) has a_{k-1} a_k > 0.
bool is_reversible_real(std::span<const GaussianInt> digits);

struct SandwichBounds {
  Interval lower;          // contains (2/(2+sqrt2)) / (|q_n|^2 (|c| + sqrt2/2))
  Interval upper;          // contains (4/(2-sqrt2)) / (|c| |q_n|^2)
  Rational distance_sq;    // |z - p_n/q_n|^2, exact
  bool lower_holds = false;
  bool upper_holds = false;
  bool hurwitz_holds = false;  // |z - p_n/q_n| < 1/|q_n|^2
};

SandwichBounds error_sandwich(const GaussianRational& z, const ConvergentTable& table, long n,
                              const GaussianInt& c_next);

/// Whether p/q is an HCF convergent of z. If |z - p/q| < 1/(4|q|^2) and
/// p/q is not a convergent, throws std::logic_error.
bool convergent_detector(const GaussianRational& z, const GaussianInt& p, const GaussianInt& q);

}  // namespace hurwitz
