#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/continued_fraction.hpp"
#include "hurwitz/enclosure.hpp"

namespace hurwitz {

/// v_0 and u_1..u_N with v_n = u_n + 2 v_{n-1}.
struct FoldingSchedule {
  unsigned long v0 = 0;
  std::vector<unsigned long> u;

  size_t size() const { return u.size(); }
  unsigned long v(size_t n) const;  // n <= size()
  std::vector<unsigned long> all_v() const;
};

struct TauSchedule {
  FoldingSchedule schedule;
  Rational tau;
  Rational lambda;
  unsigned long start = 0;  // least integer >= n_0(λ, τ)
};

/// v_n = floor(λ τ^(n + 3 + start)) for n = 0..count.
TauSchedule schedule_from_tau(const Rational& tau, const Rational& lambda, const GaussianInt& base, size_t count);

/// Ψ(x) = x^-t (log(1 + x))^-s
struct PsiFamily {
  Rational t;
  Rational s;
};

/// u_1 = 1, then u_{n+1} = least u >= 1 with 2 < |b|^(u + 2 v_n) Ψ(|b|^v_n);
/// checks 2 < |b|^v_{n+1} Ψ(|b|^v_n) <= 2|b| at every stage.
FoldingSchedule schedule_from_psi(const PsiFamily& psi, const GaussianInt& base, unsigned long v0, size_t count);

/// w_1 = 1, w_{2n+1} = u_n, w_{2n} = 1 + (bit n-1 of the index). Needs A >= 2.
std::vector<FoldingSchedule> w_variant_schedules(const FoldingSchedule& schedule, const GaussianInt& base,
                                                 size_t count);
FoldingSchedule w_variant(const FoldingSchedule& schedule, const GaussianInt& base, const std::string& bits);

enum class XiVariant { General, UnitFold };

struct XiStage {
  size_t n = 0;
  unsigned long v = 0;
  size_t length = 0;            // digits in the stage stream
  GaussianInt series_numerator;  // ξ^n = P_n / b^v_n
  GaussianInt p, q;              // last convergent of the stage stream
  GaussianInt unit;              // q / b^v_n
  bool unit_as_predicted = false;
  bool series_agrees = false;  // p / q = P_n / b^v_n
  bool full = false;           // automaton state F° after the stream, so the stream is the HCF
  std::optional<GaussianInt> middle_digit;
  bool middle_is_expected = false;  // b^u_n, or a_last ± 1 for the unit variant
  Integer max_digit_norm;
  size_t digits_below_eight = 0;  // |c|^2 < 8
};

struct DesignatedCheck {
  size_t m = 0;
  GaussianInt d;              // d_m = P_m
  bool nearest_ok = false;    // nearest(b^v_m ξ^{m+1}) = P_m
  bool gap_ok = false;        // 9 < N(b)^(v_{m+1} - v_m)
  bool identity_ok = false;   // p/q at the end of stage m equals d_m / b^v_m
};

struct SandwichCheck {
  size_t m = 0;
  Rational w_norm;  // |s_{m+1} + s_{m+2} b^-Δ|^2, or 1 when the second term joins the remainder
  Rational rho;     // bound on the rest of b^v_{m+1} (ξ - ξ^m)
  bool lower_ok = false;  // |ξ - d_m/b^v_m| >= (1/2) |b|^-v_{m+1}
  bool upper_ok = false;  // |ξ - d_m/b^v_m| <= (3/2) |b|^-v_{m+1}
};

struct XiNumber {
  GaussianInt base;
  FoldingSchedule schedule;
  Digits seed;
  XiVariant variant = XiVariant::General;
  GaussianInt seed_unit;        // q_h / b^v0
  std::vector<int> term_signs;  // s_1, s_2, ...: ξ^n = ξ^{n-1} + s_n / b^v_n
  std::vector<XiStage> stages;  // stage 0 is the seed
  std::vector<DesignatedCheck> designated;
  std::vector<SandwichCheck> sandwich;
  Digits stream;  // digits of the last stage
};

/// Seed must be full and mirror-full. For the general variant every middle
/// digit b^u_n needs |b^u_n|^2 >= 8; the schedule needs `stages + 3` entries.
XiNumber build_xi(std::span<const GaussianInt> seed, const GaussianInt& base, const FoldingSchedule& schedule,
                  XiVariant variant, size_t stages);

struct ExponentBracket {
  size_t m = 0;
  Rational ratio;  // v_{m+1} / v_m
  Interval mu;     // contains -log|ξ - d_m/b^v_m| / log|b^v_m|
};

std::vector<ExponentBracket> estimate_exponent(const XiNumber& xi, size_t depth);

/// Sum over digits[k] b^(lowest_power + k), digits in {0, ..., A^2}.
struct DigitExpansion {
  GaussianInt base;
  long lowest_power = 0;
  std::vector<unsigned> digits;
};

/// A for b = -A ± i; throws otherwise.
long katai_szabo_a(const GaussianInt& base);

DigitExpansion encode_base_b(const GaussianInt& z, const GaussianInt& base);
/// r / b^v
DigitExpansion encode_fraction(const GaussianInt& r, unsigned long v, const GaussianInt& base);
GaussianRational decode_base_b(const DigitExpansion& e);
/// Most significant digit first; "0" for zero; a '.' before b^-1 when present.
std::string digits_msf(const DigitExpansion& e);

/// sum_{n = start}^{start + terms - 1} 1 / b^floor(λ τ^n) as an expansion.
DigitExpansion xi_series_expansion(const TauSchedule& ts, const GaussianInt& base, size_t terms);

}  // namespace hurwitz
