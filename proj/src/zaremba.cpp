#include "hurwitz/zaremba.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <thread>

#include "hurwitz/prototype.hpp"

namespace hurwitz {

bool all_passed(const Transcript& t) {
  return std::all_of(t.begin(), t.end(), [](const CheckStep& s) { return s.passed; });
}

namespace {

enum class Family { MinusThree, MinusTwo, Two, Three, Five };

struct BaseInfo {
  Family family;
  bool lower;  // conjugate of the listed sign
};

std::optional<BaseInfo> classify(const GaussianInt& b) {
  if (b == GaussianInt(-3, 1)) return BaseInfo{Family::MinusThree, false};
  if (b == GaussianInt(-3, -1)) return BaseInfo{Family::MinusThree, true};
  if (b == GaussianInt(-2, 1)) return BaseInfo{Family::MinusTwo, false};
  if (b == GaussianInt(-2, -1)) return BaseInfo{Family::MinusTwo, true};
  if (b == GaussianInt(2)) return BaseInfo{Family::Two, false};
  if (b == GaussianInt(3)) return BaseInfo{Family::Three, false};
  if (b == GaussianInt(5)) return BaseInfo{Family::Five, false};
  return std::nullopt;
}

BaseInfo require_base(const GaussianInt& b) {
  auto info = classify(b);
  if (!info) throw std::invalid_argument("unsupported base " + to_string(b) + " (use -3±i, -2±i, 2, 3 or 5)");
  return *info;
}

Seed seed(unsigned long k, GaussianInt num, Digits d) { return {k, std::move(num), std::move(d)}; }

using G = GaussianInt;

std::vector<Seed> upper_seeds(Family f) {
  switch (f) {
    case Family::MinusThree:
      return {seed(1, G(1), {G(-3, 1)}), seed(2, G(2, 3), {G(0, -3), G(-2, -3)})};
    case Family::MinusTwo:
      return {
          seed(1, G(1), {G(-2, 1)}),
          seed(2, G(0, 2), {G(-2, -1), G(0, 2)}),
          seed(3, G(2, -4), {G(-2, 1), G(-2, 1), G(2, -1)}),
          seed(4, G(5, -6), {G(2, -3), G(-1, -2), G(-3, 1)}),
          seed(5, G(13, -11), {G(0, 3), G(1, -3), G(2, -1), G(-2, -2)}),
          seed(6, G(27, -38), {G(-1, -3), G(1, -2), G(1, -2), G(-3, -2), G(2, -3)}),
          seed(7, G(0, -97), {G(0, 3), G(3, 3), G(-2, -2), G(0, 3), G(1, -3)}),
      };
    case Family::Two:
      return {
          seed(1, G(-1), {G(-2)}),
          seed(2, G(1), {G(4)}),
          seed(3, G(3), {G(3), G(-3)}),
          seed(4, G(5), {G(3), G(5)}),
          seed(5, G(9), {G(4), G(-2), G(-4)}),
          seed(6, G(17), {G(4), G(-4), G(-4)}),
          seed(7, G(19), {G(7), G(-4), G(5)}),
          seed(8, G(79), {G(3), G(4), G(6), G(3)}),
          seed(9, G(71), {G(7), G(5), G(-4), G(-4)}),
          seed(10, G(165), {G(6), G(5), G(-7), G(5)}),
          seed(11, G(423), {G(5), G(-6), G(-3), G(-5), G(-4)}),
          seed(12, G(557), {G(7), G(3), G(-6), G(5), G(-7)}),
          seed(13, G(1453), {G(6), G(-3), G(4), G(5), G(-5), G(-5)}),
      };
    case Family::Three:
      return {
          seed(1, G(1), {G(3)}),
          seed(2, G(4), {G(2), G(4)}),
          seed(3, G(10), {G(3), G(-3), G(-3)}),
          seed(4, G(19), {G(4), G(4), G(-5)}),
          seed(5, G(50), {G(5), G(-7), G(-7)}),
          seed(6, G(107), {G(7), G(-5), G(-3), G(7)}),
          seed(7, G(323), {G(7), G(-4), G(-3), G(4), G(-7)}),
      };
    case Family::Five:
      return {seed(1, G(1), {G(5)}), seed(2, G(6), {G(4), G(6)})};
  }
  return {};
}

struct Step {
  unsigned long parent;
  std::optional<GaussianInt> x;  // nullopt: fold_unit
};

Step recursion_step(Family f, const GaussianInt& base, unsigned long k) {
  switch (f) {
    case Family::Two:
      // 2^(2j+2) = 4 (2^j)^2, 2^(2j+3) = 8 (2^j)^2
      return k % 2 == 0 ? Step{k / 2 - 1, GaussianInt(4)} : Step{(k - 3) / 2, GaussianInt(8)};
    case Family::Three:
      return k % 2 == 0 ? Step{k / 2, std::nullopt} : Step{k / 2, GaussianInt(3)};
    case Family::Five:
      return k % 2 == 0 ? Step{k / 2, std::nullopt} : Step{k / 2, GaussianInt(5)};
    default:
      return k % 2 == 0 ? Step{k / 2, std::nullopt} : Step{k / 2, base};
  }
}

std::string key_of(const GaussianInt& b) { return to_string(b); }

std::mutex g_cache_mutex;
std::map<std::pair<std::string, unsigned long>, ZarembaCertificate> g_cache;

CheckStep check(std::string name, bool ok, std::string detail) { return {std::move(name), ok, std::move(detail)}; }

}  // namespace

bool supported_base(const GaussianInt& base) { return classify(base).has_value(); }

Integer eta_sq_for(const GaussianInt& base) {
  switch (require_base(base).family) {
    case Family::MinusThree:
    case Family::MinusTwo: return 18;
    case Family::Two:
    case Family::Three: return 64;
    case Family::Five: return 49;
  }
  return 0;
}

std::vector<Seed> seed_table(const GaussianInt& base) {
  BaseInfo info = require_base(base);
  std::vector<Seed> seeds = upper_seeds(info.family);
  if (info.lower) {
    for (auto& s : seeds) {
      s.numerator = s.numerator.conj();
      for (auto& d : s.digits) d = d.conj();
    }
  }
  return seeds;
}

Transcript verify_certificate(const ZarembaCertificate& cert) {
  Transcript t;
  const GaussianInt den = cert.denominator();
  const CfSequence cf = cert.digits.as_cf();

  std::optional<GaussianRational> value;
  try {
    value = evaluate(cf);
  } catch (const std::exception& e) {
    t.push_back(check("evaluation", false, e.what()));
  }
  if (value) {
    bool ok = *value == GaussianRational(cert.numerator, den);
    t.push_back(check("evaluation", ok, ok ? "evaluate(digits) = numerator / base^power" : "value differs"));
  }

  GaussianInt g = gauss_gcd(cert.numerator, den);
  t.push_back(check("gcd", g.is_unit(), "gcd = " + to_string(g)));

  bool in_domain = in_fundamental_domain(cert.numerator, den);
  t.push_back(check("domain", in_domain, in_domain ? "numerator / base^power in F" : "outside F"));

  Integer worst = 0;
  for (const auto& d : cert.digits.digits) worst = std::max(worst, d.norm());
  t.push_back(check("bound", worst <= cert.eta_sq,
                    "max |a_i|^2 = " + to_string(worst) + " <= " + to_string(cert.eta_sq)));

  bool canonical = false;
  try {
    canonical = hcf_expand(cert.numerator, den) == cert.digits;
  } catch (const std::exception&) {
  }
  t.push_back(check("canonical", canonical, canonical ? "hcf_expand reproduces the digits" : "expansion differs"));

  bool digits_ok = std::all_of(cert.digits.digits.begin(), cert.digits.digits.end(), digit_in_alphabet);
  if (digits_ok) {
    ValidityReport v = is_valid(cert.digits.digits);
    t.push_back(check("validity", v.verdict == Validity::Valid, to_string(v.verdict) + ": " + v.trace()));
  } else {
    t.push_back(check("validity", false, "digit outside D"));
  }

  auto info = classify(cert.base);
  if (info && info->family == Family::MinusTwo && cert.power >= 4 && !cert.digits.digits.empty()) {
    const Digits& d = cert.digits.digits;
    bool ok = std::all_of(d.begin(), d.end(), [](const GaussianInt& a) { return a.norm() >= 5 && a.norm() <= 18; });
    for (const GaussianInt* end : {&d.front(), &d.back()}) {
      for (long s : {1L, -1L}) {
        Integer n = (*end + GaussianInt(s)).norm();
        ok = ok && n >= 5 && n <= 18;
      }
    }
    t.push_back(check("window", ok, "5 <= |a_i|^2 <= 18 and 5 <= |a_i ± 1|^2 <= 18 at both ends"));
  }
  return t;
}

ZarembaCertificate certify(const GaussianInt& base, unsigned long power) {
  BaseInfo info = require_base(base);
  if (power < 1) throw std::invalid_argument("certify: power must be at least 1");
  const auto key = std::make_pair(key_of(base), power);
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }

  ZarembaCertificate cert;
  cert.base = base;
  cert.power = power;
  cert.eta_sq = eta_sq_for(base);
  std::vector<Seed> seeds = seed_table(base);
  auto it = std::find_if(seeds.begin(), seeds.end(), [&](const Seed& s) { return s.power == power; });
  if (it != seeds.end()) {
    // the listed digits are compared separately; the certificate uses the
    // canonical expansion of the listed fraction
    cert.numerator = it->numerator;
    cert.digits = hcf_expand(it->numerator, cert.denominator());
    cert.folded_is_canonical = cert.digits.digits == it->digits;
    cert.origin = cert.folded_is_canonical ? "seed" : "seed (listed digits differ from the expansion)";
  } else {
    Step step = recursion_step(info.family, base, power);
    ZarembaCertificate parent = certify(base, step.parent);
    CfSequence folded;
    if (step.x) {
      folded = fold(parent.digits.as_cf(), *step.x);
      cert.origin = "fold x=" + to_string(*step.x) + " of k=" + std::to_string(step.parent);
    } else {
      folded = fold_unit(parent.digits.as_cf());
      cert.origin = "fold_unit of k=" + std::to_string(step.parent);
    }
    // the folding identity fixes the numerator; the digits are its exact
    // expansion, which need not be the folded sequence
    GaussianRational value = evaluate(folded);
    GaussianRational scaled = value * GaussianRational(cert.denominator());
    if (!scaled.is_gaussian_integer()) {
      Transcript t{check("evaluation", false, "value " + to_string(value) + " has the wrong denominator")};
      throw CertificationError("certificate for " + to_string(base) + "^" + std::to_string(power) + " failed", t);
    }
    cert.numerator = scaled.num();
    cert.digits = hcf_expand(cert.numerator, cert.denominator());
    cert.folded_is_canonical = cert.digits.as_cf() == folded;
    if (!cert.folded_is_canonical) cert.origin += " (folded sequence is not the expansion)";
  }

  cert.transcript = verify_certificate(cert);
  if (!all_passed(cert.transcript))
    throw CertificationError("certificate for " + to_string(base) + "^" + std::to_string(power) + " failed",
                             cert.transcript);

  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_cache.emplace(key, cert);
  return cert;
}

bool folding_with_two_breaks(const ZarembaCertificate& cert, long x) {
  CfSequence folded = fold(cert.digits.as_cf(), GaussianInt(x));
  const Digits& d = folded.tail;
  Digits rev(d.rbegin(), d.rend());
  if (!is_reversible_real(d) || !is_reversible_real(rev)) return true;
  if (!std::all_of(d.begin(), d.end(), digit_in_alphabet)) return true;
  return is_valid(d).verdict != Validity::Valid || is_valid(rev).verdict != Validity::Valid;
}

// ---- oracle

namespace {

struct G64 {
  std::int64_t re, im;
};

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

// max digit norm of a/den, or -1 when pruned (>= limit) or gcd not a unit
std::int64_t max_digit_norm(G64 den, G64 a, std::int64_t limit) {
  G64 prev = den, cur = a;
  std::int64_t worst = 0;
  while (cur.re != 0 || cur.im != 0) {
    // prev / cur = prev conj(cur) / N(cur)
    const std::int64_t m = cur.re * cur.re + cur.im * cur.im;
    const std::int64_t x = prev.re * cur.re + prev.im * cur.im;
    const std::int64_t y = prev.im * cur.re - prev.re * cur.im;
    const G64 q{floor_div64(2 * x + m, 2 * m), floor_div64(2 * y + m, 2 * m)};
    const std::int64_t n = q.re * q.re + q.im * q.im;
    if (n >= limit) return -1;
    worst = std::max(worst, n);
    G64 rem{prev.re - (q.re * cur.re - q.im * cur.im), prev.im - (q.re * cur.im + q.im * cur.re)};
    prev = cur;
    cur = rem;
  }
  if (prev.re * prev.re + prev.im * prev.im != 1) return -1;
  return worst;
}

}  // namespace

OracleResult brute_force_min_K(const GaussianInt& den, unsigned long long norm_cap, unsigned threads) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (den.norm() > Integer(std::to_string(norm_cap)) || norm_cap > (1ull << 40))
    throw std::invalid_argument("oracle restricted to desk scale");
  const G64 d{den.re.get_si(), den.im.get_si()};
  const std::int64_t m = d.re * d.re + d.im * d.im;
  // a/den in F  <=>  a = den w with |Re w|, |Im w| <= 1/2, so |a|_inf <= |den|
  std::int64_t r = 1;
  while (r * r < m) ++r;

  struct Best {
    std::int64_t k = INT64_MAX;
    G64 a{0, 0};
    unsigned long long scanned = 0;
  };
  std::atomic<std::int64_t> shared_best{INT64_MAX};
  std::atomic<std::int64_t> next_row{-r};
  if (threads == 0) threads = default_threads();
  std::vector<Best> per(threads);

  auto worker = [&](unsigned id) {
    Best& b = per[id];
    for (std::int64_t re; (re = next_row.fetch_add(1)) <= r;) {
      for (std::int64_t im = -r; im <= r; ++im) {
        // a conj(den) = X + iY must satisfy -m <= 2X < m and -m <= 2Y < m
        const std::int64_t x = re * d.re + im * d.im;
        const std::int64_t y = im * d.re - re * d.im;
        if (2 * x < -m || 2 * x >= m || 2 * y < -m || 2 * y >= m) continue;
        if (re == 0 && im == 0) continue;
        ++b.scanned;
        const std::int64_t shared = shared_best.load(std::memory_order_relaxed);
        const std::int64_t limit = std::min(b.k, shared == INT64_MAX ? shared : shared + 1);
        const std::int64_t k = max_digit_norm(d, {re, im}, limit);
        if (k < 0) continue;
        if (k < b.k || (k == b.k && (re < b.a.re || (re == b.a.re && im < b.a.im)))) {
          b.k = k;
          b.a = {re, im};
          std::int64_t cur = shared_best.load();
          while (k < cur && !shared_best.compare_exchange_weak(cur, k)) {
          }
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& t : pool) t.join();

  Best best;
  unsigned long long scanned = 0;
  for (const auto& b : per) {
    scanned += b.scanned;
    if (b.k < best.k || (b.k == best.k && b.k != INT64_MAX &&
                         (b.a.re < best.a.re || (b.a.re == best.a.re && b.a.im < best.a.im)))) {
      best.k = b.k;
      best.a = b.a;
    }
  }
  OracleResult out;
  out.scanned = scanned;
  if (best.k == INT64_MAX) {
    // den is a unit: only a = 0 lies in F·den, and 0/den has no digits
    if (!den.is_unit()) throw std::logic_error("oracle found no coprime numerator");
    out.numerator = GaussianInt(0);
    out.k_sq = 0;
    return out;
  }
  out.numerator = GaussianInt(best.a.re, best.a.im);
  out.k_sq = best.k;
  out.expansion = hcf_expand(out.numerator, den);
  return out;
}

}  // namespace hurwitz
