// Randomized invariants shared by property_test and the acceptance run.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "hurwitz/continued_fraction.hpp"
#include "hurwitz/hcf.hpp"
#include "hurwitz/spectrum.hpp"

namespace hurwitz::props {

constexpr std::uint64_t kSeed = 0x5eed2024cafef00dULL;

struct Outcome {
  std::string name;
  size_t cases = 0;
  size_t failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// denominators of norm <= 10^6
inline GaussianRational random_rational(std::mt19937_64& rng) {
  GaussianInt den;
  do {
    den = GaussianInt(uniform(rng, -707, 707), uniform(rng, -707, 707));
  } while (den.is_zero());
  GaussianInt num(uniform(rng, -3000, 3000), uniform(rng, -3000, 3000));
  return GaussianRational(num, den);
}

inline GaussianInt random_x(std::mt19937_64& rng) {
  GaussianInt x;
  do {
    x = GaussianInt(uniform(rng, -20, 20), uniform(rng, -20, 20));
  } while (x.norm() < 2);
  return x;
}

inline Outcome determinant_identity(size_t n, std::uint64_t seed = kSeed) {
  Outcome o{"determinant identity", n};
  std::mt19937_64 rng(seed);
  for (size_t k = 0; k < n; ++k) {
    GaussianRational z = random_rational(rng);
    ConvergentTable t = convergents(hcf_expand(z).as_cf());
    for (long j = 0; j <= t.last_index(); ++j) {
      if (t.determinant(j) != GaussianInt(j % 2 == 0 ? 1 : -1)) {
        o.fail(to_string(z) + " at n = " + std::to_string(j));
        break;
      }
    }
  }
  return o;
}

inline Outcome strict_growth(size_t n, std::uint64_t seed = kSeed + 1) {
  Outcome o{"|q_n| strictly increasing", n};
  std::mt19937_64 rng(seed);
  for (size_t k = 0; k < n; ++k) {
    GaussianRational z = random_rational(rng);
    ConvergentTable t = convergents(hcf_expand(z).as_cf());
    for (long j = 0; j < t.last_index(); ++j) {
      if (!(t.q(j).norm() < t.q(j + 1).norm())) {
        o.fail(to_string(z) + " at n = " + std::to_string(j));
        break;
      }
    }
  }
  return o;
}

inline Outcome hurwitz_bound(size_t n, std::uint64_t seed = kSeed + 2) {
  Outcome o{"|z - p_n/q_n| < 1/|q_n|^2", n};
  std::mt19937_64 rng(seed);
  for (size_t k = 0; k < n; ++k) {
    GaussianRational z = random_rational(rng);
    ConvergentTable t = convergents(hcf_expand(z).as_cf());
    for (long j = 0; j < t.last_index(); ++j) {
      Integer qn = t.q(j).norm();
      Rational dist = (z - GaussianRational(t.p(j), t.q(j))).norm();
      if (!(dist * qn * qn < 1)) {
        o.fail(to_string(z) + " at n = " + std::to_string(j));
        break;
      }
    }
  }
  return o;
}

inline Outcome folding_identity(size_t n, std::uint64_t seed = kSeed + 3) {
  Outcome o{"folding identity", n};
  std::mt19937_64 rng(seed);
  for (size_t k = 0; k < n; ++k) {
    GaussianRational z;
    do {
      z = random_rational(rng);
    } while (hcf_expand(z).digits.empty());
    CfSequence cf = hcf_expand(z).as_cf();
    GaussianInt x = random_x(rng);
    ConvergentTable t = convergents(cf);
    long last = t.last_index();
    GaussianInt q = t.q(last);
    try {
      GaussianRational diff = evaluate(fold(cf, x)) - z;
      if (diff != GaussianRational(GaussianInt(last % 2 == 0 ? 1 : -1), x * q * q))
        o.fail(to_string(cf) + " with x = " + to_string(x));
    } catch (const UndefinedContinuedFraction&) {
      o.fail(to_string(cf) + " with x = " + to_string(x) + " is undefined");
    }
  }
  return o;
}

inline Outcome hcf_round_trip(size_t n, std::uint64_t seed = kSeed + 4) {
  Outcome o{"hcf round-trip", n};
  std::mt19937_64 rng(seed);
  for (size_t k = 0; k < n; ++k) {
    GaussianRational z = random_rational(rng);
    HcfExpansion e = hcf_expand(z);
    bool digits_ok = true;
    for (const auto& a : e.digits) digits_ok = digits_ok && digit_in_alphabet(a);
    if (!digits_ok || evaluate(e.as_cf()) != z) o.fail(to_string(z));
  }
  return o;
}

inline Outcome encode_round_trip(long a, size_t n, std::uint64_t seed = kSeed + 5) {
  Outcome o{"encode/decode A = " + std::to_string(a), n};
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(a));
  for (size_t k = 0; k < n; ++k) {
    GaussianInt base(-a, uniform(rng, 0, 1) ? 1 : -1);
    GaussianInt z(uniform(rng, -1000000, 1000000), uniform(rng, -1000000, 1000000));
    DigitExpansion e = encode_base_b(z, base);
    bool ok = decode_base_b(e) == GaussianRational(z);
    for (unsigned d : e.digits) ok = ok && d <= static_cast<unsigned>(a * a);
    if (!ok) o.fail(to_string(z) + " in base " + to_string(base));
  }
  return o;
}

}  // namespace hurwitz::props
