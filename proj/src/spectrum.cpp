#include "hurwitz/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hurwitz/prototype.hpp"

namespace hurwitz {

namespace {

Rational rpow(const Rational& x, unsigned long k) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), k);
  return make_rational(n, d);
}

Integer ipow(const Integer& x, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

unsigned long to_ulong(const Integer& x) {
  if (x < 0 || !x.fits_ulong_p()) throw std::overflow_error("schedule entry out of range: " + to_string(x));
  return x.get_ui();
}

void require_expanding(const GaussianInt& base) {
  if (base.norm() < 2) throw std::invalid_argument("base must satisfy |b| > 1: " + to_string(base));
}

// N^e > 4 for rational e, decided exactly.
bool power_exceeds_four(const Integer& n, const Rational& e) {
  if (e <= 0) return false;
  if (e > 2) return true;
  // e = P/Q with P <= 2Q
  Integer p = e.get_num(), q = e.get_den();
  return ipow(n, to_ulong(p)) > ipow(Integer(4), to_ulong(q));
}

struct PsiPredicate {
  Integer n;  // N(b)
  Rational t, s;

  // 2 < |b|^(u + 2v) Ψ(|b|^v)
  bool operator()(long u, unsigned long v) const {
    Rational e = Rational(u) + (Rational(2) - t) * Rational(v);
    if (s == 0) return power_exceeds_four(n, e);
    for (unsigned bits : {64u, 256u, 1024u, 4096u}) {
      Interval ln_n = ln_enclosure(Rational(n), bits);
      Interval ell{ln_n.lo / 2, ln_n.hi / 2};
      // ln(1 + X) = v ell + ln(1 + 1/X), 0 < ln(1 + 1/X) < 1/X <= 2^-floor(v/2)
      unsigned long k = std::min<unsigned long>(v / 2, bits + 8);
      Rational slack = make_rational(Integer(1), ipow(Integer(2), k));
      Interval big_l{ell.lo * Rational(v), ell.hi * Rational(v) + slack};
      Interval f = Interval::point(e / 2) * ln_n - Interval::point(s) * ln_enclosure(big_l, bits) -
                   ln_enclosure(Rational(2), bits);
      if (f.lo > 0) return true;
      if (f.hi <= 0) return false;
    }
    throw std::runtime_error("psi comparison undecided at u = " + std::to_string(u));
  }
};

struct SignModel {
  std::vector<int> signs;             // s_1..s_N
  std::vector<GaussianInt> units;     // predicted q / b^v_n, n = 0..N
  std::vector<bool> odd_length;       // parity of the stage length, n = 0..N
};

SignModel predict_signs(const GaussianInt& eps0, size_t seed_len, const FoldingSchedule& sch, XiVariant variant) {
  SignModel m;
  GaussianInt eps = eps0;
  bool odd = seed_len % 2 == 1;
  m.units.push_back(eps);
  m.odd_length.push_back(odd);
  for (size_t n = 1; n <= sch.size(); ++n) {
    GaussianInt e2 = eps * eps;
    int sl = odd ? -1 : 1;
    m.signs.push_back(sl * static_cast<int>(e2.re.get_si()));
    bool unit_fold = variant == XiVariant::UnitFold && sch.u[n - 1] == 0;
    if (unit_fold) {
      eps = e2;
      odd = false;
    } else {
      eps = GaussianInt(sl) * e2;
      odd = true;
    }
    m.units.push_back(eps);
    m.odd_length.push_back(odd);
  }
  return m;
}

Integer max_norm(std::span<const GaussianInt> ds, size_t& below_eight) {
  Integer best = 0;
  below_eight = 0;
  for (const auto& d : ds) {
    Integer n = d.norm();
    if (n < 8) ++below_eight;
    if (n > best) best = n;
  }
  return best;
}

}  // namespace

unsigned long FoldingSchedule::v(size_t n) const {
  if (n > u.size()) throw std::out_of_range("schedule has " + std::to_string(u.size()) + " entries");
  unsigned long x = v0;
  for (size_t k = 0; k < n; ++k) x = 2 * x + u[k];
  return x;
}

std::vector<unsigned long> FoldingSchedule::all_v() const {
  std::vector<unsigned long> out{v0};
  for (unsigned long uk : u) out.push_back(2 * out.back() + uk);
  return out;
}

TauSchedule schedule_from_tau(const Rational& tau, const Rational& lambda, const GaussianInt& base, size_t count) {
  require_expanding(base);
  if (tau < 2) throw std::invalid_argument("tau must be >= 2");
  if (lambda <= 0) throw std::invalid_argument("lambda must be > 0");
  TauSchedule ts;
  ts.tau = tau;
  ts.lambda = lambda;
  // n_0 = 1 + max{0, floor(log(3/λ)/log τ), log 3 / log|b|}; start = ceil(n_0)
  Rational three_over = Rational(3) / lambda;
  unsigned long m_tau = 0;
  while (rpow(tau, m_tau + 1) <= three_over) ++m_tau;
  Integer nb = base.norm();
  unsigned long m_b = 0;
  while (ipow(nb, m_b) < 9) ++m_b;
  ts.start = 1 + std::max(m_tau, m_b);
  std::vector<unsigned long> v;
  for (size_t n = 0; n <= count; ++n) v.push_back(to_ulong(floor(lambda * rpow(tau, n + 3 + ts.start))));
  ts.schedule.v0 = v[0];
  for (size_t n = 1; n <= count; ++n) {
    if (v[n] < 2 * v[n - 1]) throw std::logic_error("negative u in tau schedule");
    ts.schedule.u.push_back(v[n] - 2 * v[n - 1]);
  }
  return ts;
}

FoldingSchedule schedule_from_psi(const PsiFamily& psi, const GaussianInt& base, unsigned long v0, size_t count) {
  require_expanding(base);
  if (!((psi.t > 2 && psi.s >= 0) || (psi.t == 2 && psi.s > 0)))
    throw std::invalid_argument("unsupported Ψ: x^2 Ψ(x) must decrease to 0 (t > 2, or t = 2 and s > 0)");
  if (v0 == 0) throw std::invalid_argument("v0 must be positive");
  PsiPredicate pred{base.norm(), psi.t, psi.s};
  FoldingSchedule sch;
  sch.v0 = v0;
  if (count == 0) return sch;
  sch.u.push_back(1);
  double ln_n = std::log(base.norm().get_d());
  while (sch.u.size() < count) {
    unsigned long v = sch.v(sch.u.size());
    double est = (psi.t.get_d() - 2) * static_cast<double>(v) +
                 (2 * std::log(2.0) + 2 * psi.s.get_d() * std::log(v * ln_n / 2)) / ln_n;
    long u = std::max(1L, static_cast<long>(std::floor(est)) - 1);
    while (!pred(u, v)) ++u;
    while (u > 1 && pred(u - 1, v)) --u;
    // lower half of the invariant is pred(u); the upper half is pred failing one step down
    if (pred(u - 1, v)) throw std::runtime_error("psi schedule invariant fails at stage " + std::to_string(sch.u.size() + 1));
    sch.u.push_back(static_cast<unsigned long>(u));
  }
  return sch;
}

std::vector<FoldingSchedule> w_variant_schedules(const FoldingSchedule& schedule, const GaussianInt& base,
                                                 size_t count) {
  std::vector<FoldingSchedule> out;
  size_t slots = schedule.size();
  if (slots < 64 && count > (size_t{1} << slots))
    throw std::invalid_argument("only " + std::to_string(size_t{1} << slots) + " w-variants available");
  for (size_t k = 0; k < count; ++k) {
    std::string bits(slots, '0');
    for (size_t j = 0; j < slots && j < 64; ++j)
      if ((k >> j) & 1) bits[j] = '1';
    out.push_back(w_variant(schedule, base, bits));
  }
  return out;
}

FoldingSchedule w_variant(const FoldingSchedule& schedule, const GaussianInt& base, const std::string& bits) {
  if (katai_szabo_a(base) < 2) throw std::invalid_argument("variant requires A ≥ 2");
  if (bits.size() > schedule.size()) throw std::invalid_argument("more bits than even slots");
  FoldingSchedule w;
  w.v0 = schedule.v0;
  w.u.push_back(1);
  for (size_t n = 1; n <= schedule.size(); ++n) {
    char c = n - 1 < bits.size() ? bits[n - 1] : '0';
    if (c != '0' && c != '1') throw std::invalid_argument("w-variant bits must be 0 or 1");
    w.u.push_back(c == '1' ? 2 : 1);   // w_{2n}
    w.u.push_back(schedule.u[n - 1]);  // w_{2n+1}
  }
  return w;
}

XiNumber build_xi(std::span<const GaussianInt> seed, const GaussianInt& base, const FoldingSchedule& schedule,
                  XiVariant variant, size_t stages) {
  require_expanding(base);
  if (seed.empty()) throw std::invalid_argument("empty seed");
  if (schedule.size() < stages) throw std::invalid_argument("schedule shorter than the requested stages");
  if (!is_full(seed)) throw std::invalid_argument("seed is not full");
  if (!is_full(mirror_negate(seed))) throw std::invalid_argument("seed is not mirror-full");
  const Integer nb = base.norm();
  for (size_t n = 1; n <= stages; ++n) {
    unsigned long u = schedule.u[n - 1];
    if (variant == XiVariant::General && ipow(nb, u) < 8)
      throw std::invalid_argument("stage " + std::to_string(n) + ": middle digit b^" + std::to_string(u) +
                                  " has |.|^2 < 8");
  }

  XiNumber xi;
  xi.base = base;
  xi.schedule = schedule;
  xi.seed.assign(seed.begin(), seed.end());
  xi.variant = variant;

  const auto& aut = PrototypeAutomaton::instance();
  auto v = schedule.all_v();

  // stage 0
  ConvergentStream cs;
  std::optional<int> state = PrototypeAutomaton::full();
  for (const auto& d : seed) {
    cs.push(d);
    if (state) state = aut.step(*state, d);
  }
  GaussianInt bv0 = pow(base, v[0]);
  if (!divides(bv0, cs.q()) || !exact_div(cs.q(), bv0).is_unit())
    throw std::invalid_argument("seed denominator is not an associate of b^" + std::to_string(v[0]));
  xi.seed_unit = exact_div(cs.q(), bv0);

  SignModel model = predict_signs(xi.seed_unit, seed.size(), schedule, variant);
  xi.term_signs = model.signs;

  // series numerators P_0..P_K, K = min(size, stages + 1)
  size_t series_len = std::min(schedule.size(), stages + 1);
  std::vector<GaussianInt> P{cs.p() * xi.seed_unit.conj()};
  for (size_t n = 1; n <= series_len; ++n)
    P.push_back(P.back() * pow(base, v[n] - v[n - 1]) + GaussianInt(model.signs[n - 1]));

  auto record = [&](size_t n, const Digits& ds, const ConvergentStream& s, std::optional<int> st) {
    XiStage r;
    r.n = n;
    r.v = v[n];
    r.length = ds.size();
    r.series_numerator = P[n];
    r.p = s.p();
    r.q = s.q();
    GaussianInt bv = pow(base, v[n]);
    if (divides(bv, r.q)) {
      r.unit = exact_div(r.q, bv);
      r.unit_as_predicted = r.unit == model.units[n];
    }
    r.series_agrees = r.p * bv == P[n] * r.q;
    r.full = st && *st == PrototypeAutomaton::full();
    r.max_digit_norm = max_norm(ds, r.digits_below_eight);
    return r;
  };

  Digits digits(seed.begin(), seed.end());
  xi.stages.push_back(record(0, digits, cs, state));

  for (size_t n = 1; n <= stages; ++n) {
    unsigned long u = schedule.u[n - 1];
    size_t prev_len = digits.size();
    GaussianInt last = digits.back();
    XiStage r;
    if (variant == XiVariant::UnitFold && u == 0) {
      digits = fold_unit(CfSequence{GaussianInt(0), digits}).tail;
      ConvergentStream fresh;
      std::optional<int> st = PrototypeAutomaton::full();
      for (const auto& d : digits) {
        fresh.push(d);
        if (st) st = aut.step(*st, d);
      }
      r = record(n, digits, fresh, st);
      r.middle_digit = digits[prev_len - 1];
      r.middle_is_expected = digits[prev_len - 1] == last + GaussianInt(1) && digits[prev_len] == last - GaussianInt(1);
    } else {
      GaussianInt x = pow(base, u);
      if (variant == XiVariant::UnitFold) {
        // not a prefix extension once a unit fold has happened; rebuild
        digits = fold(CfSequence{GaussianInt(0), digits}, x).tail;
        ConvergentStream fresh;
        std::optional<int> st = PrototypeAutomaton::full();
        for (const auto& d : digits) {
          fresh.push(d);
          if (st) st = aut.step(*st, d);
        }
        r = record(n, digits, fresh, st);
      } else {
        digits.reserve(2 * prev_len + 1);
        digits.push_back(x);
        cs.push(x);
        if (state) state = aut.step(*state, x);
        for (size_t k = prev_len; k-- > 0;) {
          GaussianInt d = -digits[k];
          cs.push(d);
          if (state) state = aut.step(*state, d);
          digits.push_back(std::move(d));
        }
        r = record(n, digits, cs, state);
      }
      r.middle_digit = digits[prev_len];
      r.middle_is_expected = digits[prev_len] == x;
    }
    xi.stages.push_back(std::move(r));
  }
  xi.stream = std::move(digits);

  // d_m = P_m is nearest(b^v_m ξ) once the tail is below 1/2
  for (size_t m = 0; m <= stages && m + 1 <= series_len; ++m) {
    DesignatedCheck d;
    d.m = m;
    d.d = P[m];
    unsigned long gap = v[m + 1] - v[m];
    d.nearest_ok = nearest_quotient(P[m + 1], pow(base, gap)) == P[m];
    d.gap_ok = gap >= 4 ? nb >= 2 : ipow(nb, gap) > 9;
    d.identity_ok = xi.stages[m].series_agrees;
    xi.designated.push_back(d);
  }

  // b^v_{m+1} (ξ - ξ^m) = s_{m+1} + s_{m+2} b^-Δ + ρ
  const Rational geometric = nb >= 4 ? Rational(2) : Rational(4);  // >= 1 / (1 - |b|^-1)
  for (size_t m = 0; m <= stages && m + 3 <= schedule.size(); ++m) {
    SandwichCheck sw;
    sw.m = m;
    unsigned long delta = v[m + 2] - v[m + 1];
    unsigned long rest;
    GaussianInt s1(model.signs[m]);
    if (delta <= 1024) {
      GaussianInt bd = pow(base, delta);
      GaussianInt w = s1 * bd + GaussianInt(model.signs[m + 1]);
      sw.w_norm = make_rational(w.norm(), bd.norm());
      rest = v[m + 3] - v[m + 1];
    } else {
      sw.w_norm = 1;
      rest = delta;
    }
    unsigned long g = std::min<unsigned long>(rest / 2, 256);
    sw.rho = geometric / Rational(ipow(nb, g));
    Rational lo = Rational(1, 2) + sw.rho;
    Rational hi = Rational(3, 2) - sw.rho;
    sw.lower_ok = sw.w_norm >= lo * lo;
    sw.upper_ok = hi > 0 && sw.w_norm <= hi * hi;
    xi.sandwich.push_back(sw);
  }
  return xi;
}

std::vector<ExponentBracket> estimate_exponent(const XiNumber& xi, size_t depth) {
  std::vector<ExponentBracket> out;
  const unsigned bits = 128;
  Interval ln_n = ln_enclosure(Rational(xi.base.norm()), bits);
  Rational ell_lo = ln_n.lo / 2;
  Rational ln_three_halves = ln_enclosure(Rational(3, 2), bits).hi;
  Rational ln_two = ln_enclosure(Rational(2), bits).hi;
  auto v = xi.schedule.all_v();
  for (const auto& sw : xi.sandwich) {
    if (sw.m > depth) break;
    if (!sw.lower_ok || !sw.upper_ok)
      throw std::logic_error("tail sandwich fails at stage " + std::to_string(sw.m));
    if (v[sw.m] == 0) continue;
    ExponentBracket b;
    b.m = sw.m;
    b.ratio = make_rational(Integer(v[sw.m + 1]), Integer(v[sw.m]));
    Rational scale = Rational(v[sw.m]) * ell_lo;
    b.mu = {b.ratio - ln_three_halves / scale, b.ratio + ln_two / scale};
    out.push_back(b);
  }
  return out;
}

long katai_szabo_a(const GaussianInt& base) {
  if (base.re >= 0 || (base.im != 1 && base.im != -1) || !base.re.fits_slong_p())
    throw std::invalid_argument("base must be -A+i or -A-i with A >= 1: " + to_string(base));
  return -base.re.get_si();
}

DigitExpansion encode_base_b(const GaussianInt& z, const GaussianInt& base) {
  long a = katai_szabo_a(base);
  Integer modulus = Integer(a) * a + 1;
  Integer slope = base.im * a;  // i ≡ ±A mod b
  DigitExpansion e;
  e.base = base;
  GaussianInt cur = z;
  size_t cap = 4 * mpz_sizeinbase(Integer(z.norm() + 1).get_mpz_t(), 2) + 64;
  while (!cur.is_zero()) {
    if (e.digits.size() > cap) throw std::logic_error("base-b expansion did not terminate");
    Integer d = cur.re + cur.im * slope;
    mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
    e.digits.push_back(static_cast<unsigned>(d.get_ui()));
    cur = exact_div(cur - GaussianInt(d), base);
  }
  return e;
}

DigitExpansion encode_fraction(const GaussianInt& r, unsigned long v, const GaussianInt& base) {
  DigitExpansion e = encode_base_b(r, base);
  e.lowest_power = -static_cast<long>(v);
  return e;
}

GaussianRational decode_base_b(const DigitExpansion& e) {
  GaussianInt acc = 0;
  for (size_t k = e.digits.size(); k-- > 0;) acc = acc * e.base + GaussianInt(static_cast<long>(e.digits[k]));
  if (e.lowest_power >= 0) return GaussianRational(acc * pow(e.base, static_cast<unsigned long>(e.lowest_power)));
  return GaussianRational(acc, pow(e.base, static_cast<unsigned long>(-e.lowest_power)));
}

std::string digits_msf(const DigitExpansion& e) {
  long a = katai_szabo_a(e.base);
  bool wide = a * a >= 10;
  long hi = std::max<long>(e.lowest_power + static_cast<long>(e.digits.size()) - 1, 0);
  long lo = std::min<long>(e.lowest_power, 0);
  if (e.digits.empty()) return "0";
  std::string out;
  for (long p = hi; p >= lo; --p) {
    long k = p - e.lowest_power;
    unsigned d = (k >= 0 && k < static_cast<long>(e.digits.size())) ? e.digits[static_cast<size_t>(k)] : 0;
    if (!out.empty() && out.back() != '.' && wide) out += ',';
    out += std::to_string(d);
    if (p == 0 && lo < 0) out += '.';
  }
  return out;
}

DigitExpansion xi_series_expansion(const TauSchedule& ts, const GaussianInt& base, size_t terms) {
  katai_szabo_a(base);
  if (terms == 0) return DigitExpansion{base, 0, {}};
  std::vector<unsigned long> k;
  for (size_t j = 0; j < terms; ++j) k.push_back(to_ulong(floor(ts.lambda * rpow(ts.tau, ts.start + j))));
  unsigned long top = *std::max_element(k.begin(), k.end());
  GaussianInt num = 0;
  for (unsigned long kj : k) num += pow(base, top - kj);
  return encode_fraction(num, top, base);
}

}  // namespace hurwitz
