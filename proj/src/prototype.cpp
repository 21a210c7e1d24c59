#include "hurwitz/prototype.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "hurwitz/hcf.hpp"

namespace hurwitz {

namespace {

void require_digit(const GaussianInt& d) {
  if (!digit_in_alphabet(d)) throw std::invalid_argument("digit " + to_string(d) + " is not in D");
}

std::string describe(const Region& r) {
  std::vector<GenCircleConstraint> extra = extra_constraints(r);
  if (extra.empty()) return "F";
  static const GaussianInt neighbours[] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  std::string out = "F minus";
  bool first = true;
  for (const auto& k : extra) {
    std::string piece;
    for (const auto& c : neighbours) {
      if (k == GenCircleConstraint::outside_disk(c, 1)) piece = "D(" + to_string(c) + ",1)";
    }
    if (piece.empty()) piece = "complement of " + k.to_string();
    out += (first ? " " : ", ") + piece;
    first = false;
  }
  return out;
}

std::vector<GaussianInt> frontier() {
  std::vector<GaussianInt> ds;
  for (long re = -4; re <= 4; ++re)
    for (long im = -4; im <= 4; ++im)
      if (digit_in_alphabet(GaussianInt(re, im))) ds.emplace_back(re, im);
  return ds;
}

}  // namespace

Region cylinder_one(const GaussianInt& a) {
  require_digit(a);
  std::vector<GenCircleConstraint> cs;
  const Region sq = Region::open_fundamental_domain();
  for (const auto& k : sq.constraints()) cs.push_back(k.translated(a).inverted());
  auto r = canonical_in_square(std::move(cs));
  return r ? *r : Region::nothing();
}

std::optional<Region> prototype_step(const Region& s, const GaussianInt& d) {
  require_digit(d);
  if (s.marked_empty()) return std::nullopt;
  std::vector<GenCircleConstraint> cs;
  for (const auto& k : s.constraints()) cs.push_back(k.inverted().translated(-d));
  return canonical_in_square(std::move(cs));
}

// ---- automaton

int PrototypeAutomaton::small_index(const GaussianInt& d) {
  if (sup_norm(d) > 2) return -1;
  return static_cast<int>((d.re.get_si() + 2) * 5 + (d.im.get_si() + 2));
}

int PrototypeAutomaton::large_class(const GaussianInt& d) { return (sgn(d.re) + 1) * 3 + (sgn(d.im) + 1); }

PrototypeAutomaton PrototypeAutomaton::explore() {
  constexpr size_t kCap = 64;
  PrototypeAutomaton a;
  std::map<Fingerprint, std::vector<int>> by_fingerprint;

  auto identify = [&](const Region& r) -> int {
    Fingerprint fp = fingerprint(r);
    auto& bucket = by_fingerprint[fp];
    for (int id : bucket) {
      const Region& other = a.states_[static_cast<size_t>(id)].region;
      if (other == r) return id;
      if (regions_equal(other, r)) {
        ++a.exact_confirmations_;
        return id;
      }
    }
    if (a.states_.size() >= kCap) throw std::runtime_error("automaton failed to close");
    PrototypeState s;
    s.id = static_cast<int>(a.states_.size());
    s.label = "S" + std::to_string(s.id);
    s.region = r;
    s.fingerprint = std::move(fp);
    s.description = describe(r);
    a.states_.push_back(std::move(s));
    bucket.push_back(a.states_.back().id);
    return a.states_.back().id;
  };

  identify(Region::open_fundamental_domain());
  const std::vector<GaussianInt> ds = frontier();
  for (size_t head = 0; head < a.states_.size(); ++head) {
    const Region current = a.states_[head].region;
    for (const auto& d : ds) {
      auto next = prototype_step(current, d);
      int to = next ? identify(*next) : -1;
      a.transitions_.push_back({static_cast<int>(head), d, to});
    }
  }

  // distinct states must have distinct fingerprints for the fast tables
  for (const auto& [fp, bucket] : by_fingerprint)
    if (bucket.size() > 1) throw std::logic_error("prototype states share a grid fingerprint");

  a.small_.assign(a.states_.size(), std::vector<int>(25, -2));
  a.large_.assign(a.states_.size(), std::vector<int>(9, -2));
  for (const auto& t : a.transitions_) {
    int si = small_index(t.digit);
    if (si >= 0) {
      a.small_[static_cast<size_t>(t.from)][static_cast<size_t>(si)] = t.to;
      continue;
    }
    if (t.to != -1 && t.to != full()) throw std::logic_error("a large digit produced a proper prototype set");
    int& slot = a.large_[static_cast<size_t>(t.from)][static_cast<size_t>(large_class(t.digit))];
    if (slot != -2 && slot != t.to) throw std::logic_error("large digits of one sign class act differently");
    slot = t.to;
  }
  return a;
}

const PrototypeAutomaton& PrototypeAutomaton::instance() {
  static const PrototypeAutomaton a = explore();
  return a;
}

std::optional<int> PrototypeAutomaton::step(int state, const GaussianInt& d) const {
  require_digit(d);
  const auto s = static_cast<size_t>(state);
  int si = small_index(d);
  int to = si >= 0 ? small_[s][static_cast<size_t>(si)] : large_[s][static_cast<size_t>(large_class(d))];
  if (to == -1) return std::nullopt;
  return to;
}

std::optional<int> PrototypeAutomaton::find(const Region& r) const {
  Fingerprint fp = fingerprint(r);
  for (const auto& s : states_)
    if (s.fingerprint == fp && (s.region == r || regions_equal(s.region, r))) return s.id;
  return std::nullopt;
}

std::string PrototypeAutomaton::export_table() const {
  std::ostringstream os;
  os << "state,digit,next\n";
  for (const auto& t : transitions_)
    os << state(t.from).label << ',' << to_string(t.digit) << ',' << (t.to < 0 ? "-" : state(t.to).label) << '\n';
  return os.str();
}

// ---- validity

std::string to_string(Validity v) {
  switch (v) {
    case Validity::Valid: return "Valid";
    case Validity::ValidBoundaryOnly: return "ValidBoundaryOnly";
    case Validity::Invalid: return "Invalid";
  }
  return "?";
}

std::string ValidityReport::trace() const {
  const auto& a = PrototypeAutomaton::instance();
  std::string out = a.state(PrototypeAutomaton::full()).label;
  for (int s : states) out += " -> " + a.state(s).label;
  if (died_at) out += " -> empty";
  return out;
}

namespace {

// [0; a1, ..., a_{n-1}, a_n + w], nullopt on a zero division
std::optional<GaussianRational> endpoint(std::span<const GaussianInt> digits, const GaussianRational& w) {
  GaussianRational t = GaussianRational(digits.back()) + w;
  for (size_t k = digits.size() - 1; k-- > 0;) {
    if (t.is_zero()) return std::nullopt;
    t = GaussianRational(digits[k]) + t.reciprocal();
  }
  if (t.is_zero()) return std::nullopt;
  return t.reciprocal();
}

bool expands_with_prefix(const GaussianRational& z, std::span<const GaussianInt> digits) {
  HcfExpansion e = hcf_expand(z);
  if (!e.integer_part.is_zero() || e.digits.size() < digits.size()) return false;
  return std::equal(digits.begin(), digits.end(), e.digits.begin());
}

std::optional<GaussianRational> closed_cylinder_witness(std::span<const GaussianInt> digits) {
  std::vector<GaussianRational> tails = {GaussianRational(0)};
  const GaussianInt den(kGridDen);
  for (long j = -kGridDen / 2; j < kGridDen / 2; ++j) {
    tails.emplace_back(GaussianInt(-kGridDen / 2, j), den);  // Re = -1/2
    tails.emplace_back(GaussianInt(j, -kGridDen / 2), den);  // Im = -1/2
  }
  for (const auto& w : tails) {
    auto z = endpoint(digits, w);
    if (z && expands_with_prefix(*z, digits)) return z;
  }
  return std::nullopt;
}

}  // namespace

ValidityReport is_valid(std::span<const GaussianInt> digits) {
  for (const auto& d : digits) require_digit(d);
  const auto& a = PrototypeAutomaton::instance();
  ValidityReport r;
  int s = PrototypeAutomaton::full();
  for (size_t k = 0; k < digits.size(); ++k) {
    auto next = a.step(s, digits[k]);
    if (!next) {
      r.died_at = k;
      break;
    }
    s = *next;
    r.states.push_back(s);
  }
  if (!r.died_at) return r;
  r.boundary_point = closed_cylinder_witness(digits);
  r.verdict = r.boundary_point ? Validity::ValidBoundaryOnly : Validity::Invalid;
  return r;
}

bool is_full(std::span<const GaussianInt> digits) {
  const auto& a = PrototypeAutomaton::instance();
  int s = PrototypeAutomaton::full();
  for (const auto& d : digits) {
    auto next = a.step(s, d);
    if (!next) return false;
    s = *next;
  }
  return s == PrototypeAutomaton::full();
}

MirrorCheck mirror_conjugate_state(std::span<const GaussianInt> digits) {
  if (!is_full(digits)) throw std::invalid_argument("mirror_conjugate_state: sequence is not full");
  Digits rev = mirror_negate(digits);
  Digits conj;
  for (const auto& d : digits) conj.push_back(d.conj());
  MirrorCheck m{is_full(rev), is_full(conj)};
  if (!m.negated_reversal_full) throw std::logic_error("negated reversal of a full sequence is not full");
  if (!m.conjugate_full) throw std::logic_error("conjugate of a full sequence is not full");
  return m;
}

// ---- folding programs

Digits apply_fold_map(FoldMap m, std::span<const GaussianInt> x, const GaussianInt& d) {
  if (x.empty()) throw std::invalid_argument("apply_fold_map: empty sequence");
  Digits out(x.begin(), x.end());
  if (m == FoldMap::F) {
    out.push_back(d);
    Digits tail = mirror_negate(x);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
  out.back() += GaussianInt(1);
  Digits minus(x.begin(), x.end());
  minus.back() -= GaussianInt(1);
  Digits tail = mirror(minus);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::string program_to_string(const std::vector<FoldMap>& program) {
  std::string s;
  for (auto m : program) s += m == FoldMap::F ? 'f' : 'g';
  return s;
}

namespace {

// label of the final open state, or "empty at k" with the first dead index
std::string run_label(std::span<const GaussianInt> digits, std::optional<size_t>& died) {
  const auto& a = PrototypeAutomaton::instance();
  int s = PrototypeAutomaton::full();
  for (size_t k = 0; k < digits.size(); ++k) {
    auto next = a.step(s, digits[k]);
    if (!next) {
      died = k;
      return "empty";
    }
    s = *next;
  }
  return a.state(s).label;
}

}  // namespace

ProgramResult check_program(std::span<const GaussianInt> seed, const std::vector<FoldMap>& program,
                            const GaussianInt& d) {
  ProgramResult r;
  r.program = program;
  r.sequence.assign(seed.begin(), seed.end());
  for (auto m : program) r.sequence = apply_fold_map(m, r.sequence, d);
  const std::string full_label = PrototypeAutomaton::instance().state(PrototypeAutomaton::full()).label;
  std::optional<size_t> died, died_mirror;
  r.final_state = run_label(r.sequence, died);
  Digits rev = mirror_negate(r.sequence);
  r.mirror_state = run_label(rev, died_mirror);
  r.passed = r.final_state == full_label && r.mirror_state == full_label;
  if (!r.passed) {
    if (died) {
      r.failure = "h(a) dies at prefix " + digits_to_string(std::span(r.sequence).first(*died + 1));
    } else if (died_mirror) {
      r.failure = "mirror dies at prefix " + digits_to_string(std::span(rev).first(*died_mirror + 1));
    } else {
      r.failure = "ends in " + r.final_state + " / " + r.mirror_state;
    }
  }
  return r;
}

unsigned default_threads() {
  if (const char* env = std::getenv("HURWITZ_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

FoldingReport verify_folding_program(std::span<const GaussianInt> seed, int depth, const GaussianInt& d,
                                     unsigned threads) {
  if (depth < 1) throw std::invalid_argument("verify_folding_program: depth must be positive");
  if (!is_full(seed) || !is_full(mirror_negate(seed)))
    throw std::invalid_argument("verify_folding_program: seed must be full and mirror-full");
  PrototypeAutomaton::instance();  // build before the workers start

  std::vector<std::vector<FoldMap>> programs;
  for (int len = 1; len <= depth; ++len) {
    for (unsigned long bits = 0; bits < (1ul << len); ++bits) {
      std::vector<FoldMap> p;
      for (int k = len - 1; k >= 0; --k) p.push_back((bits >> k) & 1 ? FoldMap::G : FoldMap::F);
      programs.push_back(std::move(p));
    }
  }

  FoldingReport report;
  report.results.resize(programs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next.fetch_add(1)) < programs.size();)
      report.results[k] = check_program(seed, programs[k], d);
  };
  if (threads == 0) threads = default_threads();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(programs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& r : report.results) report.all_passed = report.all_passed && r.passed;
  return report;
}

}  // namespace hurwitz
