#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/gaussian.hpp"

namespace hurwitz {

using Digits = std::vector<GaussianInt>;

/// [a0; a1, ..., an] with no digit-set restriction.
struct CfSequence {
  GaussianInt head;
  Digits tail;

  friend bool operator==(const CfSequence& a, const CfSequence& b) {
    return a.head == b.head && a.tail == b.tail;
  }
};

/// Convergents p_n, q_n for n = -1, 0, ..., N.
class ConvergentTable {
 public:
  explicit ConvergentTable(const CfSequence& cf);

  long last_index() const { return static_cast<long>(p_.size()) - 2; }
  const GaussianInt& p(long n) const { return p_.at(static_cast<size_t>(n + 1)); }
  const GaussianInt& q(long n) const { return q_.at(static_cast<size_t>(n + 1)); }

  /// q_n p_{n-1} - q_{n-1} p_n
  GaussianInt determinant(long n) const;

 private:
  std::vector<GaussianInt> p_;
  std::vector<GaussianInt> q_;
};

ConvergentTable convergents(const CfSequence& cf);

/// Streaming version of the recurrences for long digit streams whose
/// full table would not fit in memory.
class ConvergentStream {
 public:
  explicit ConvergentStream(const GaussianInt& head = GaussianInt(0));

  void push(const GaussianInt& a);
  long index() const { return n_; }
  const GaussianInt& p() const { return p_; }
  const GaussianInt& q() const { return q_; }
  const GaussianInt& p_prev() const { return p_prev_; }
  const GaussianInt& q_prev() const { return q_prev_; }

 private:
  long n_ = 0;
  GaussianInt p_prev_, q_prev_, p_, q_;
};

class UndefinedContinuedFraction : public std::domain_error {
 public:
  UndefinedContinuedFraction(size_t suffix_start, const std::string& what)
      : std::domain_error(what), suffix_start_(suffix_start) {}
  /// Index k (1-based into the tail) with [a_k; ..., a_N] = 0.
  size_t suffix_start() const { return suffix_start_; }

 private:
  size_t suffix_start_;
};

GaussianRational evaluate(const CfSequence& cf);

/// [a0; a1..an, x, -an..-a1]
CfSequence fold(const CfSequence& cf, const GaussianInt& x);

/// [a0; a1..a(n-1), an+1, an-1, a(n-1)..a1]
CfSequence fold_unit(const CfSequence& cf);

Digits mirror(std::span<const GaussianInt> s);
Digits mirror_negate(std::span<const GaussianInt> s);

std::string to_string(const CfSequence& cf);
std::string digits_to_string(std::span<const GaussianInt> digits, std::string_view sep = ", ");

/// "[a0; a1, a2]"; without a semicolon the list is the tail and a0 = 0
CfSequence parse_cf(std::string_view text);

/// "a1,a2,a3" with optional brackets and spaces
Digits parse_digits(std::string_view text);

}  // namespace hurwitz
