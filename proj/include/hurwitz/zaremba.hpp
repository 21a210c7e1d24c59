#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/hcf.hpp"

namespace hurwitz {

struct CheckStep {
  std::string name;
  bool passed = false;
  std::string detail;
};

using Transcript = std::vector<CheckStep>;

bool all_passed(const Transcript& t);

struct ZarembaCertificate {
  GaussianInt base;
  unsigned long power = 0;
  GaussianInt numerator;
  HcfExpansion digits;
  Integer eta_sq;
  std::string origin;  // "seed", "fold_unit of k=4", "fold x=4 of k=6"
  bool folded_is_canonical = true;  // the folded (or listed) digits are the expansion
  Transcript transcript;

  GaussianInt denominator() const { return pow(base, power); }
};

class CertificationError : public std::runtime_error {
 public:
  CertificationError(const std::string& what, Transcript t)
      : std::runtime_error(what), transcript_(std::move(t)) {}
  const Transcript& transcript() const { return transcript_; }

 private:
  Transcript transcript_;
};

/// -3+i, -3-i, -2+i, -2-i, 2, 3, 5
bool supported_base(const GaussianInt& base);
Integer eta_sq_for(const GaussianInt& base);

struct Seed {
  unsigned long power;
  GaussianInt numerator;
  Digits digits;
};

/// Hand-listed seeds for a supported base (lower signs are conjugates).
std::vector<Seed> seed_table(const GaussianInt& base);

/// Built by halving down to a seed, then folding back up; every stage
/// is verified. Cached per (base, power). Thread-safe.
ZarembaCertificate certify(const GaussianInt& base, unsigned long power);

/// Evaluation, gcd, domain, bound, canonical round-trip, open validity,
/// and for (-2±i)^n, n >= 4, the digit windows.
Transcript verify_certificate(const ZarembaCertificate& cert);

/// Folding a real certificate with x = ±2: true when the result or its
/// reversal fails the real reversibility rule or the validity check.
bool folding_with_two_breaks(const ZarembaCertificate& cert, long x);

struct OracleResult {
  GaussianInt numerator;
  Integer k_sq;  // max |a_i|^2
  HcfExpansion expansion;
  unsigned long long scanned = 0;  // nonzero numerators in F·den
};

constexpr unsigned long long kOracleNormCap = 1ull << 24;

/// Exhaustive minimum of max|a_i|^2 over a/den in F with gcd(a, den) a
/// unit; ties go to the lexicographically smallest (Re, Im).
OracleResult brute_force_min_K(const GaussianInt& den, unsigned long long norm_cap = kOracleNormCap,
                               unsigned threads = 0);

}  // namespace hurwitz
