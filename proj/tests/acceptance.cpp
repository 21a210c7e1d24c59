// One PASS/FAIL line per acceptance criterion, followed by indented detail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "hurwitz/hcf.hpp"
#include "hurwitz/prototype.hpp"
#include "hurwitz/spectrum.hpp"
#include "hurwitz/zaremba.hpp"
#include "properties.hpp"

using namespace hurwitz;

namespace {

// time limits, seconds
constexpr double kSeedLimit = 1;
constexpr double kCertifyLimit = 60;
constexpr double kAutomatonLimit = 30;
constexpr double kFoldingLimit = 60;
constexpr double kPropertyLimit = 120;
constexpr double kOracleLimit = 600;

// exponent evidence
const Rational kBracketLo(23, 10), kBracketHi(27, 10);
const Rational kRatioTolerance(5, 100);

// digit counts: len(k)/k over the upper half of the range stays within this factor
constexpr double kLinearBand = 2;

constexpr size_t kPropertyCases = 10000;

const GaussianInt kB(-2, 1);

struct Verdict {
  bool pass = true;
  std::vector<std::string> detail;
  void note(const std::string& s) { detail.push_back(s); }
  void fail(const std::string& s) {
    pass = false;
    detail.push_back("FAIL: " + s);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::string dec(const Rational& x) { return decimal_down(x, 6); }

Integer max_norm(std::span<const GaussianInt> ds) {
  Integer m = 0;
  for (const auto& d : ds) m = std::max(m, d.norm());
  return m;
}

void time_limit(Verdict& v, double took, double limit) {
  if (took >= limit) v.fail("runtime " + secs(took) + " exceeds " + secs(limit));
}

std::vector<GaussianInt> alphabet_up_to(long r) {
  std::vector<GaussianInt> out;
  for (long x = -r; x <= r; ++x)
    for (long y = -r; y <= r; ++y)
      if (digit_in_alphabet(GaussianInt(x, y))) out.emplace_back(x, y);
  return out;
}

const std::vector<GaussianInt> kSeedBases = {GaussianInt(-3, 1), GaussianInt(-3, -1), GaussianInt(-2, 1),
                                             GaussianInt(-2, -1), GaussianInt(2),      GaussianInt(3),
                                             GaussianInt(5)};

Verdict seeds() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  size_t rows = 0;
  std::map<std::string, size_t> per_base;
  for (const auto& b : kSeedBases)
    for (const auto& s : seed_table(b)) {
      ++rows;
      ++per_base[to_string(b)];
      Digits got = hcf_expand(s.numerator, pow(b, s.power)).digits;
      if (got != s.digits)
        v.fail(to_string(s.numerator) + "/(" + to_string(b) + ")^" + std::to_string(s.power) + ": listed [" +
               digits_to_string(s.digits) + "], expansion [" + digits_to_string(got) + "]");
    }
  double took = seconds_since(t0);
  std::string counts;
  for (const auto& [b, n] : per_base) counts += " " + b + ":" + std::to_string(n);
  v.note(std::to_string(rows) + " listed seeds;" + counts);
  const size_t expected = 2 * 2 + 7 * 2 + 13 + 7 + 2;
  if (rows != expected) v.fail("expected " + std::to_string(expected) + " seeds");
  time_limit(v, took, kSeedLimit);
  v.note("runtime " + secs(took));
  return v;
}

Verdict certificates() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  struct Job {
    GaussianInt base;
    unsigned long kmax;
    Integer bound;
  };
  std::vector<Job> jobs = {{GaussianInt(-3, 1), 32, 18}, {GaussianInt(-3, -1), 32, 18}, {GaussianInt(-2, 1), 32, 18},
                           {GaussianInt(-2, -1), 32, 18}, {GaussianInt(2), 64, 64},      {GaussianInt(3), 64, 64},
                           {GaussianInt(5), 32, 49}};
  for (const auto& j : jobs) {
    size_t certified = 0, noncanonical_folds = 0;
    Integer worst = 0;
    double lo = 1e300, hi = 0;
    for (unsigned long k = 1; k <= j.kmax; ++k) {
      ZarembaCertificate c;
      try {
        c = certify(j.base, k);
      } catch (const CertificationError& e) {
        v.fail(to_string(j.base) + "^" + std::to_string(k) + ": " + e.what());
        continue;
      }
      Transcript t = verify_certificate(c);
      if (!all_passed(t)) {
        for (const auto& s : t)
          if (!s.passed) v.fail(to_string(j.base) + "^" + std::to_string(k) + ": " + s.name + " " + s.detail);
        continue;
      }
      Integer m = max_norm(c.digits.digits);
      worst = std::max(worst, m);
      if (m > j.bound) v.fail(to_string(j.base) + "^" + std::to_string(k) + ": max |a|^2 = " + to_string(m));
      if (!c.folded_is_canonical) ++noncanonical_folds;
      if (2 * k > j.kmax) {
        double r = static_cast<double>(c.digits.digits.size()) / static_cast<double>(k);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      ++certified;
    }
    char band[400];
    std::snprintf(band, sizeof band, "len/k in [%.3f, %.3f]", lo, hi);
    v.note(to_string(j.base) + ": " + std::to_string(certified) + "/" + std::to_string(j.kmax) +
           " verified, max |a|^2 = " + to_string(worst) + " <= " + to_string(j.bound) + ", " + band +
           (noncanonical_folds ? ", " + std::to_string(noncanonical_folds) + " re-expanded folds" : ""));
    if (!(lo > 0) || hi > kLinearBand * lo) v.fail(to_string(j.base) + ": digit count not linear in k");
  }
  double took = seconds_since(t0);
  time_limit(v, took, kCertifyLimit);
  v.note("runtime " + secs(took));
  return v;
}

// Printed row index (1..4) and the transport a = i^k r or a = conj(i^k r).
struct RowMatch {
  size_t row;
  int k;
  bool conj;
};

std::optional<RowMatch> printed_row_for(const GaussianInt& a) {
  auto table = printed_successor_table();
  GaussianInt i(0, 1);
  for (bool c : {false, true})
    for (int k = 0; k < 4; ++k)
      for (size_t row = 1; row < table.size(); ++row) {
        GaussianInt img = pow(i, static_cast<unsigned long>(k)) * table[row].condition;
        if ((c ? img.conj() : img) == a) return RowMatch{row, k, c};
      }
  return std::nullopt;
}

// Same power of i on both columns, as printed.
bool printed_allows(const RowMatch& m, int branch, const GaussianInt& w) {
  GaussianInt inv = pow(GaussianInt(0, -1), static_cast<unsigned long>(m.k));
  GaussianInt pulled = inv * (m.conj ? w.conj() : w);
  return printed_row_allows(m.row, branch, pulled);
}

Verdict automaton() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  PrototypeAutomaton aut = PrototypeAutomaton::explore();
  double took = seconds_since(t0);
  v.note(std::to_string(aut.states().size()) + " states, " + std::to_string(aut.transitions().size()) +
         " transitions");
  if (aut.states().size() != 13) v.fail("expected 13 states");

  auto candidates = alphabet_up_to(5);
  auto successors = [&](int state) {
    std::set<std::pair<long, long>> s;
    for (const auto& w : candidates)
      if (aut.step(state, w)) s.insert({w.re.get_si(), w.im.get_si()});
    return s;
  };
  std::set<std::pair<long, long>> everything;
  for (const auto& w : candidates) everything.insert({w.re.get_si(), w.im.get_si()});

  size_t digits_checked = 0, mismatched = 0, uncovered = 0;
  for (const auto& a : alphabet_up_to(5)) {
    auto m = printed_row_for(a);
    // |a|^2 = 8 has no printed row; it is full from F but not from every state
    if (!m && sup_norm(a) < 3) {
      ++uncovered;
      continue;
    }
    std::set<std::set<std::pair<long, long>>> entered;
    for (const auto& st : aut.states())
      if (auto t = aut.step(st.id, a)) entered.insert(successors(*t));
    std::set<std::set<std::pair<long, long>>> printed;
    if (!m) {
      printed.insert(everything);
    } else {
      int branches = printed_successor_table()[m->row].branches;
      for (int b = 0; b < branches; ++b) {
        std::set<std::pair<long, long>> s;
        for (const auto& w : candidates)
          if (printed_allows(*m, b, w)) s.insert({w.re.get_si(), w.im.get_si()});
        printed.insert(s);
      }
    }
    ++digits_checked;
    if (entered != printed) {
      ++mismatched;
      std::string why;
      for (const auto& s : entered)
        if (!printed.count(s)) {
          for (const auto& w : candidates) {
            bool in_aut = s.count({w.re.get_si(), w.im.get_si()}) > 0;
            bool in_some_printed = false;
            for (const auto& p : printed) in_some_printed |= p.count({w.re.get_si(), w.im.get_si()}) > 0;
            if (in_aut != in_some_printed) {
              why = to_string(w) + (in_aut ? " reachable but not printed" : " printed but unreachable");
              break;
            }
          }
          if (why.empty()) why = "branch split differs";
          break;
        }
      if (why.empty()) why = "a printed branch is never entered";
      v.fail("a_n = " + to_string(a) + " (" + (m ? printed_successor_table()[m->row].text : "unrestricted") +
             "): " + why);
    }
  }
  v.note(std::to_string(digits_checked) + " digits with sup <= 5 compared, " + std::to_string(mismatched) +
         " differ from the printed table under same-power transport, " + std::to_string(uncovered) +
         " with |a|^2 = 8 not covered by any row");
  time_limit(v, took, kAutomatonLimit);
  v.note("exploration " + secs(took));
  return v;
}

Verdict spot_facts() {
  Verdict v;
  const auto& aut = PrototypeAutomaton::instance();
  auto state_after = [&](const char* ds) {
    std::optional<int> s = PrototypeAutomaton::full();
    for (const auto& d : parse_digits(ds))
      if (s) s = aut.step(*s, d);
    return s;
  };
  ValidityReport c2 = is_valid(parse_digits("-1+2i, 1+i"));
  v.note("C_2(-1+2i, 1+i): " + to_string(c2.verdict) + ", " + c2.trace());
  if (c2.verdict != Validity::Invalid) v.fail("C_2(-1+2i, 1+i) is not empty");
  ValidityReport good = is_valid(parse_digits("2+2i, 2+i, -3+4i"));
  v.note("(2+2i, 2+i, -3+4i): " + to_string(good.verdict) + ", " + good.trace());
  if (good.verdict != Validity::Valid) v.fail("(2+2i, 2+i, -3+4i) should be valid");
  ValidityReport bad = is_valid(parse_digits("-2+2i, 2+i, -3+4i"));
  v.note("(-2+2i, 2+i, -3+4i): " + to_string(bad.verdict) + ", " + bad.trace());
  if (bad.verdict != Validity::Invalid) v.fail("(-2+2i, 2+i, -3+4i) should be invalid");
  ValidityReport alt = is_valid(parse_digits("-2+i, 2+i, -3+4i"));
  v.note("(-2+i, 2+i, -3+4i): " + to_string(alt.verdict) + ", " + alt.trace());
  auto lhs1 = state_after("2+2i, 2+i"), rhs1 = state_after("2+i");
  auto lhs2 = state_after("-2+i, 2+i"), rhs2 = state_after("2");
  if (!(lhs1 && lhs1 == rhs1)) v.fail("F_2(2+2i, 2+i) != F_1(2+i)");
  if (!(lhs2 && lhs2 == rhs2)) v.fail("F_2(-2+i, 2+i) != F_1(2)");
  if (lhs1 && rhs1 && lhs2 && rhs2)
    v.note("F_2(2+2i, 2+i) = " + aut.state(*lhs1).label + ", F_1(2+i) = " + aut.state(*rhs1).label +
           "; F_2(-2+i, 2+i) = " + aut.state(*lhs2).label + ", F_1(2) = " + aut.state(*rhs2).label);
  return v;
}

Verdict folding_programs() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  Digits seed = parse_digits("2-3i, -1-2i, -3+i");
  FoldingReport r = verify_folding_program(seed, 4, kB);
  double took = seconds_since(t0);
  size_t passed = 0, longest = 0;
  for (const auto& p : r.results) {
    if (p.passed) ++passed;
    else v.fail(program_to_string(p.program) + ": " + p.failure);
    longest = std::max(longest, p.sequence.size());
  }
  v.note(std::to_string(passed) + "/" + std::to_string(r.results.size()) + " programs end full with full mirrors, " +
         "longest sequence " + std::to_string(longest));
  if (r.results.size() != 30) v.fail("expected 30 programs");
  time_limit(v, took, kFoldingLimit);
  v.note("runtime " + secs(took));
  return v;
}

Verdict xi_five_halves() {
  Verdict v;
  const size_t stages = 8;
  auto t0 = std::chrono::steady_clock::now();
  TauSchedule ts = schedule_from_tau(Rational(5, 2), Rational(1), kB, stages + 3);
  ZarembaCertificate seed = certify(kB, ts.schedule.v0);
  XiNumber xi = build_xi(seed.digits.digits, kB, ts.schedule, XiVariant::General, stages);
  v.note("start " + std::to_string(ts.start) + ", v_0 = " + std::to_string(ts.schedule.v0) + ", seed " +
         std::to_string(seed.digits.digits.size()) + " digits (" + seed.origin + ")");

  bool a = true, b = true, c = true;
  for (const auto& st : xi.stages) a = a && st.series_agrees && st.full;
  for (const auto& d : xi.designated) b = b && d.identity_ok && d.nearest_ok && d.gap_ok;
  for (const auto& s : xi.sandwich) c = c && s.lower_ok && s.upper_ok;
  if (xi.stages.size() != stages + 1) v.fail("stage count");
  if (xi.designated.size() < stages + 1) v.fail("designated checks missing");
  if (xi.sandwich.size() < stages + 1) v.fail("sandwich checks missing");
  v.note(std::string("(a) stream/series agreement: ") + (a ? "all stages" : "broken"));
  v.note(std::string("(b) designated convergent identity: ") + (b ? "all stages" : "broken"));
  v.note(std::string("(c) tail sandwich: ") + (c ? "all stages" : "broken"));
  if (!a) v.fail("(a)");
  if (!b) v.fail("(b)");
  if (!c) v.fail("(c)");

  std::vector<ExponentBracket> br;
  try {
    br = estimate_exponent(xi, stages);
  } catch (const std::exception& e) {
    v.fail(std::string("(d) ") + e.what());
  }
  Rational target(5, 2);
  std::optional<Rational> prev_gap;
  bool monotone = true;
  std::string ratios;
  for (const auto& e : br) {
    Rational gap = abs(e.ratio - target);
    ratios += " " + dec(e.ratio);
    if (e.m < 5) continue;
    std::string line = "m=" + std::to_string(e.m) + " ratio " + dec(e.ratio) + " mu in [" + dec(e.mu.lo) + ", " +
                       decimal_up(e.mu.hi, 6) + "]";
    v.note(line);
    if (!e.mu.within(kBracketLo, kBracketHi)) v.fail("(d) bracket outside [2.3, 2.7] at m=" + std::to_string(e.m));
    if (prev_gap && gap > *prev_gap) monotone = false;
    prev_gap = gap;
  }
  v.note("(d) ratios v_{m+1}/v_m, m = 0.." + std::to_string(br.empty() ? 0 : br.back().m) + ":" + ratios);
  if (br.size() < stages + 1) v.fail("(d) brackets stop before stage 8");
  else {
    if (!monotone) v.fail("(d) |ratio - 5/2| not monotone over stages 5-8");
    if (abs(br[stages].ratio - target) > kRatioTolerance) v.fail("(d) ratio at stage 8 not within 0.05 of 5/2");
  }
  v.note("runtime " + secs(seconds_since(t0)));
  return v;
}

Verdict xi_tau_two() {
  Verdict v;
  const size_t stages = 10;
  TauSchedule ts = schedule_from_tau(Rational(2), Rational(1), kB, stages + 3);
  ZarembaCertificate seed = certify(kB, ts.schedule.v0);
  XiNumber xi = build_xi(seed.digits.digits, kB, ts.schedule, XiVariant::UnitFold, stages);
  Integer seed_max = max_norm(seed.digits.digits);
  // |c| <= sqrt(seed_max) + |b| + 1, proven through the lower end of the enclosure
  Interval s1 = sqrt_enclosure(Rational(seed_max), 96), s2 = sqrt_enclosure(Rational(kB.norm()), 96);
  Rational x_lo = s1.lo + s2.lo + 1;
  Rational bound_sq = x_lo * x_lo;
  Integer worst = 0;
  size_t digits = 0;
  for (const auto& st : xi.stages) {
    worst = std::max(worst, st.max_digit_norm);
    if (!st.full || !st.series_agrees) v.fail("stage " + std::to_string(st.n) + " is not the expansion of its sum");
  }
  for (const auto& d : xi.stream) {
    ++digits;
    if (Rational(d.norm()) > bound_sq) v.fail("digit " + to_string(d) + " exceeds the bound");
  }
  if (Rational(worst) > bound_sq) v.fail("stage maximum exceeds the bound");
  if (xi.stages.size() != stages + 1) v.fail("stage count");
  v.note("v_0 = " + std::to_string(ts.schedule.v0) + ", " + std::to_string(xi.stages.size() - 1) + " stages, " +
         std::to_string(digits) + " digits in the last stream");
  v.note("max |c|^2 = " + to_string(worst) + ", seed max |a|^2 = " + to_string(seed_max) +
         ", bound (sqrt(" + to_string(seed_max) + ") + sqrt(5) + 1)^2 >= " + dec(bound_sq));
  return v;
}

Verdict properties() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<props::Outcome> runs = {props::determinant_identity(kPropertyCases),
                                      props::strict_growth(kPropertyCases),
                                      props::hurwitz_bound(kPropertyCases),
                                      props::folding_identity(kPropertyCases),
                                      props::hcf_round_trip(kPropertyCases)};
  for (long a : {1L, 2L, 3L}) runs.push_back(props::encode_round_trip(a, kPropertyCases));
  for (const auto& o : runs) {
    v.note(o.name + ": " + std::to_string(o.cases) + " cases, " + std::to_string(o.failures) + " failures");
    if (o.cases < kPropertyCases) v.fail(o.name + " ran too few cases");
    if (o.failures) v.fail(o.name + ": " + o.first_failure);
  }
  double took = seconds_since(t0);
  time_limit(v, took, kPropertyLimit);
  v.note("runtime " + secs(took));
  return v;
}

Verdict oracle() {
  Verdict v;
  auto t0 = std::chrono::steady_clock::now();
  struct Job {
    GaussianInt base;
    unsigned long kmax;
  };
  for (const Job& j : {Job{kB, 6}, Job{GaussianInt(2), 12}, Job{GaussianInt(3), 7}, Job{GaussianInt(5), 5}}) {
    std::string row = to_string(j.base) + ":";
    for (unsigned long k = 1; k <= j.kmax; ++k) {
      GaussianInt den = pow(j.base, k);
      ZarembaCertificate c = certify(j.base, k);
      Integer cert = max_norm(c.digits.digits);
      OracleResult r = brute_force_min_K(den);
      row += " " + std::to_string(k) + ":" + to_string(r.k_sq) + "/" + to_string(cert);
      if (r.k_sq > cert || r.k_sq > c.eta_sq)
        v.fail(to_string(j.base) + "^" + std::to_string(k) + ": optimum " + to_string(r.k_sq) + " above certificate " +
               to_string(cert));
    }
    v.note(row + "  (k:optimum/certificate)");
  }
  ZarembaCertificate four = certify(kB, 4);
  Integer m = max_norm(four.digits.digits);
  v.note("(-2+i)^4 certificate " + to_string(four.numerator) + ": max |a|^2 = " + to_string(m));
  if (four.numerator != GaussianInt(5, -6) || m != 13) v.fail("(-2+i)^4 certificate");
  double took = seconds_since(t0);
  time_limit(v, took, kOracleLimit);
  v.note("runtime " + secs(took));
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
  };
  std::vector<Criterion> all = {
      {1, "seed reproduction", seeds},
      {2, "Zaremba certificates", certificates},
      {3, "automaton closure and successor table", automaton},
      {4, "prototype spot facts", spot_facts},
      {5, "folding programs over {f, g}", folding_programs},
      {6, "xi construction, tau = 5/2", xi_five_halves},
      {7, "tau = 2 boundedness", xi_tau_two},
      {8, "property suites", properties},
      {9, "oracle dominance", oracle},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    double took = seconds_since(t0);
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << secs(took) << ")\n";
    for (const auto& d : v.detail) std::cout << "    " << d << "\n";
    std::cout.flush();
    if (!v.pass) ++failed;
  }
  std::cout << (all.size() - static_cast<size_t>(failed)) << "/" << all.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
