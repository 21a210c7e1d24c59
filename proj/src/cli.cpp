#include "hurwitz/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hurwitz/continued_fraction.hpp"
#include "hurwitz/hcf.hpp"
#include "hurwitz/prototype.hpp"
#include "hurwitz/records.hpp"
#include "hurwitz/spectrum.hpp"
#include "hurwitz/zaremba.hpp"

namespace hurwitz {

namespace {

// verification failed; message goes to stderr
struct Failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat format_of(const std::string& s) { return s == "records" ? OutputFormat::Records : OutputFormat::Csv; }

void add_format(CLI::App* app, std::string& target) {
  app->add_option("--format", target, "csv or records")->check(CLI::IsMember({"csv", "records"}));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string digit_list(std::span<const GaussianInt> ds) { return "[" + digits_to_string(ds, ", ") + "]"; }

std::string transcript_line(const Transcript& t) {
  std::string s;
  for (const auto& step : t) {
    if (!s.empty()) s += "; ";
    s += step.name + "=" + (step.passed ? "pass" : "FAIL");
  }
  return s;
}

Record certificate_record(const ZarembaCertificate& c) {
  Record r;
  r.add("base", to_string(c.base));
  r.add("power", std::to_string(c.power));
  r.add("numerator", to_string(c.numerator));
  r.add("digits", digit_list(c.digits.digits));
  r.add("eta_sq", to_string(c.eta_sq));
  r.add("origin", c.origin);
  r.add("folded_is_canonical", yes_no(c.folded_is_canonical));
  r.add("transcript", transcript_line(c.transcript));
  return r;
}

int cmd_hcf_expand(const std::string& input, const std::string& fmt, std::ostream& out) {
  GaussianRational z = parse_gaussian_rational(input);
  HcfExpansion e = hcf_expand(z);
  CfSequence cf = e.as_cf();
  ConvergentTable t = convergents(cf);
  Table tab{{"n", "a_n", "p_n", "q_n", "|q_n|^2"}, {}};
  for (long n = 0; n <= t.last_index(); ++n) {
    const GaussianInt& a = n == 0 ? cf.head : cf.tail[static_cast<size_t>(n - 1)];
    tab.rows.push_back({std::to_string(n), to_string(a), to_string(t.p(n)), to_string(t.q(n)), to_string(t.q(n).norm())});
  }
  write_table(out, tab, format_of(fmt));
  return kExitOk;
}

int cmd_cf_eval(const std::string& input, const std::string& fmt, std::ostream& out) {
  CfSequence cf = parse_cf(input);
  GaussianRational v = evaluate(cf);
  if (fmt == "records") {
    write_records(out, {Record{}.add("cf", to_string(cf)).add("value", to_string(v))});
  } else {
    out << to_string(v) << '\n';
  }
  return kExitOk;
}

int cmd_cf_fold(const std::string& input, const std::string& x_text, bool unit, std::ostream& out) {
  if (unit == !x_text.empty()) throw std::invalid_argument("cf fold needs exactly one of --x and --unit");
  CfSequence cf = parse_cf(input);
  GaussianInt x = unit ? GaussianInt(1) : parse_gaussian_int(x_text);
  CfSequence folded = unit ? fold_unit(cf) : fold(cf, x);
  GaussianRational before = evaluate(cf);
  GaussianRational after = evaluate(folded);
  ConvergentTable t = convergents(cf);
  long n = t.last_index();
  GaussianInt q = t.q(n);
  GaussianRational predicted(GaussianInt(n % 2 == 0 ? 1 : -1), x * q * q);
  bool holds = after - before == predicted;
  write_records(out, {Record{}
                          .add("cf", to_string(cf))
                          .add("folded", to_string(folded))
                          .add("value", to_string(after))
                          .add("increment", to_string(after - before))
                          .add("identity", holds ? "holds" : "FAILS")});
  if (!holds) throw Failed("folding identity fails");
  return kExitOk;
}

int cmd_validity(const std::string& input, const std::string& fmt, std::ostream& out) {
  Digits ds = parse_digits(input);
  ValidityReport rep = is_valid(ds);
  Table tab{{"digits", "verdict", "trace", "died_at", "boundary_point"}, {}};
  tab.rows.push_back({digit_list(ds), to_string(rep.verdict), rep.trace(),
                      rep.died_at ? std::to_string(*rep.died_at + 1) : "-",
                      rep.boundary_point ? to_string(*rep.boundary_point) : "-"});
  write_table(out, tab, fmt == "csv" ? OutputFormat::Csv : OutputFormat::Records);
  return rep.verdict == Validity::Invalid ? kExitVerificationFailed : kExitOk;
}

int cmd_prototype(const std::string& export_path, const std::string& fmt, std::ostream& out) {
  const auto& aut = PrototypeAutomaton::instance();
  Table states{{"state", "description"}, {}};
  for (const auto& s : aut.states()) states.rows.push_back({s.label, s.description});
  Table trans{{"state", "digit", "next"}, {}};
  for (const auto& t : aut.transitions())
    trans.rows.push_back({aut.state(t.from).label, to_string(t.digit), t.to < 0 ? "-" : aut.state(t.to).label});
  OutputFormat f = format_of(fmt);
  write_table(out, states, f);
  out << '\n';
  write_table(out, trans, f);
  if (!export_path.empty()) {
    std::ofstream file(export_path);
    if (!file) throw std::invalid_argument("cannot write " + export_path);
    file << aut.export_table();
  }
  return kExitOk;
}

int cmd_zaremba_certify(const std::string& base_text, unsigned long power, const std::string& emit, std::ostream& out,
                        std::ostream& err) {
  GaussianInt base = parse_gaussian_int(base_text);
  try {
    ZarembaCertificate c = certify(base, power);
    Record r = certificate_record(c);
    write_records(out, {r});
    if (!emit.empty()) {
      std::ofstream file(emit);
      if (!file) throw std::invalid_argument("cannot write " + emit);
      write_records(file, {r});
    }
    return kExitOk;
  } catch (const CertificationError& e) {
    err << e.what() << '\n';
    for (const auto& s : e.transcript()) err << "  " << s.name << ": " << (s.passed ? "pass" : "FAIL") << " " << s.detail << '\n';
    return kExitVerificationFailed;
  }
}

int cmd_zaremba_search(const std::string& den_text, unsigned threads, std::ostream& out) {
  GaussianInt den = parse_gaussian_int(den_text);
  OracleResult r = brute_force_min_K(den, kOracleNormCap, threads);
  write_records(out, {Record{}
                          .add("den", to_string(den))
                          .add("numerator", to_string(r.numerator))
                          .add("k_sq", to_string(r.k_sq))
                          .add("digits", digit_list(r.expansion.digits))
                          .add("scanned", std::to_string(r.scanned))});
  return kExitOk;
}

std::string decimal_digits(const Integer& norm) {
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm.get_mpz_t());
  return std::to_string(root.get_str().size());
}

int cmd_xi(const std::string& base_text, const std::string& tau_text, const std::string& lambda_text, size_t stages,
           const std::string& variant, const std::string& seed_text, const std::string& fmt, std::ostream& out) {
  GaussianInt base = parse_gaussian_int(base_text);
  Rational tau = parse_rational(tau_text);
  Rational lambda = parse_rational(lambda_text);
  TauSchedule ts = schedule_from_tau(tau, lambda, base, stages + 3);
  FoldingSchedule sch = ts.schedule;
  if (!variant.empty()) {
    if (variant.rfind("w:", 0) != 0) throw std::invalid_argument("--variant must look like w:<bits>");
    sch = w_variant(sch, base, variant.substr(2));
  }
  Digits seed;
  if (!seed_text.empty()) {
    seed = parse_digits(seed_text);
  } else {
    if (!supported_base(base) || base.is_real())
      throw std::invalid_argument("no built-in seed for base " + to_string(base) + "; pass --seed");
    seed = certify(base, sch.v0).digits.digits;
  }
  XiVariant kind = (tau == 2 && variant.empty()) ? XiVariant::UnitFold : XiVariant::General;
  XiNumber xi = build_xi(seed, base, sch, kind, stages);
  std::vector<ExponentBracket> brackets;
  bool ok = true;
  for (const auto& sw : xi.sandwich) ok = ok && sw.lower_ok && sw.upper_ok;
  if (ok) brackets = estimate_exponent(xi, stages);

  Table tab{{"m", "v_m", "u_m", "length", "q_digits", "series_agrees", "designated", "sandwich_lower", "sandwich_upper",
             "sandwich_holds", "ratio", "mu_lo", "mu_hi", "full", "middle_ok"},
            {}};
  auto v = sch.all_v();
  for (const auto& st : xi.stages) {
    size_t m = st.n;
    std::string next = m + 1 < v.size() ? std::to_string(v[m + 1]) : "?";
    const DesignatedCheck* d = m < xi.designated.size() ? &xi.designated[m] : nullptr;
    const SandwichCheck* sw = m < xi.sandwich.size() ? &xi.sandwich[m] : nullptr;
    const ExponentBracket* eb = nullptr;
    for (const auto& b : brackets)
      if (b.m == m) eb = &b;
    bool designated = d && d->nearest_ok && d->gap_ok && d->identity_ok;
    bool sandwich = sw && sw->lower_ok && sw->upper_ok;
    bool middle = m == 0 || st.middle_is_expected;
    ok = ok && st.series_agrees && designated && sandwich && st.full && middle;
    tab.rows.push_back({std::to_string(m), std::to_string(st.v), m == 0 ? "-" : std::to_string(sch.u[m - 1]),
                        std::to_string(st.length), decimal_digits(st.q.norm()), yes_no(st.series_agrees),
                        yes_no(designated), "(1/2)|b|^-" + next, "(3/2)|b|^-" + next, yes_no(sandwich),
                        eb ? decimal_down(eb->ratio, 8) : "-", eb ? decimal_down(eb->mu.lo, 6) : "-",
                        eb ? decimal_up(eb->mu.hi, 6) : "-", yes_no(st.full), m == 0 ? "-" : yes_no(middle)});
  }
  write_table(out, tab, format_of(fmt));
  if (!ok) throw Failed("xi construction check failed");
  return kExitOk;
}

int cmd_encode(const std::string& base_text, const std::string& value_text, const std::string& fmt, std::ostream& out) {
  GaussianInt base = parse_gaussian_int(base_text);
  katai_szabo_a(base);
  GaussianRational z = parse_gaussian_rational(value_text);
  DigitExpansion e;
  if (z.is_gaussian_integer()) {
    e = encode_base_b(z.num(), base);
  } else {
    size_t cap = 4 * mpz_sizeinbase(z.den().norm().get_mpz_t(), 2) + 8;
    unsigned long k = 0;
    GaussianRational scaled = z;
    while (!scaled.is_gaussian_integer()) {
      if (++k > cap) throw std::invalid_argument("denominator is not a power of the base");
      scaled = scaled * GaussianRational(base);
    }
    e = encode_fraction(scaled.num(), k, base);
  }
  if (decode_base_b(e) != z) throw Failed("decode does not reproduce the input");
  if (fmt == "records") {
    std::string low;
    for (unsigned d : e.digits) low += (low.empty() ? "" : ",") + std::to_string(d);
    write_records(out, {Record{}
                            .add("base", to_string(base))
                            .add("value", to_string(z))
                            .add("lowest_power", std::to_string(e.lowest_power))
                            .add("digits_low_first", "(" + low + ")")
                            .add("msf", digits_msf(e))});
  } else {
    out << digits_msf(e) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz continued fractions over Z[i]", "hurwitz"};
  app.require_subcommand(1);

  std::string input, fmt = "csv", rec_fmt = "records", x_text, export_path, emit, base_text, den_text;
  std::string tau_text, lambda_text = "1", variant, seed_text;
  bool unit = false;
  unsigned long power = 0;
  unsigned threads = 0;
  size_t stages = 0;

  auto* hcf = app.add_subcommand("hcf", "HCF expansion")->require_subcommand(1);
  auto* hcf_expand_cmd = hcf->add_subcommand("expand", "digits and convergents of a Gaussian rational");
  hcf_expand_cmd->add_option("value", input, "e.g. 10/27 or (5-6i)/(-2+i)^4")->required();
  add_format(hcf_expand_cmd, fmt);

  auto* cf = app.add_subcommand("cf", "continued fraction engine")->require_subcommand(1);
  auto* cf_eval = cf->add_subcommand("eval", "evaluate [a0; a1, ...]");
  cf_eval->add_option("cf", input)->required();
  add_format(cf_eval, fmt);
  auto* cf_fold = cf->add_subcommand("fold", "Folding Lemma extension");
  cf_fold->add_option("cf", input)->required();
  cf_fold->add_option("--x", x_text, "middle digit");
  cf_fold->add_flag("--unit", unit, "x = 1 with the rewrite");

  auto* validity = app.add_subcommand("validity", "digit sequence validity")->require_subcommand(1);
  auto* validity_check = validity->add_subcommand("check", "Valid, ValidBoundaryOnly or Invalid");
  validity_check->add_option("digits", input, "comma separated")->required();
  add_format(validity_check, rec_fmt);

  auto* prototype = app.add_subcommand("prototype", "prototype set automaton")->require_subcommand(1);
  auto* explore = prototype->add_subcommand("explore", "states and transitions");
  explore->add_option("--export", export_path, "write the state table");
  add_format(explore, fmt);

  auto* zaremba = app.add_subcommand("zaremba", "Zaremba certificates")->require_subcommand(1);
  auto* certify_cmd = zaremba->add_subcommand("certify", "certificate for base^power");
  certify_cmd->add_option("--base", base_text)->required();
  certify_cmd->add_option("--power", power)->required();
  certify_cmd->add_option("--emit", emit, "write the record to a file");
  auto* search = zaremba->add_subcommand("search", "exhaustive oracle");
  search->add_option("--den", den_text)->required();
  search->add_option("--threads", threads);

  auto* xi_cmd = app.add_subcommand("xi", "numbers with prescribed exponent");
  xi_cmd->add_option("--base", base_text)->required();
  xi_cmd->add_option("--tau", tau_text)->required();
  xi_cmd->add_option("--lambda", lambda_text);
  xi_cmd->add_option("--stages", stages)->required();
  xi_cmd->add_option("--variant", variant, "w:<bits>");
  xi_cmd->add_option("--seed", seed_text, "seed digits (default: Zaremba certificate of b^v0)");
  add_format(xi_cmd, fmt);

  auto* encode_cmd = app.add_subcommand("encode", "base -A±i digits");
  encode_cmd->add_option("--base", base_text)->required();
  encode_cmd->add_option("value", input)->required();
  add_format(encode_cmd, fmt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*hcf_expand_cmd) return cmd_hcf_expand(input, fmt, out);
    if (*cf_eval) return cmd_cf_eval(input, fmt, out);
    if (*cf_fold) return cmd_cf_fold(input, x_text, unit, out);
    if (*validity_check) return cmd_validity(input, rec_fmt, out);
    if (*explore) return cmd_prototype(export_path, fmt, out);
    if (*certify_cmd) return cmd_zaremba_certify(base_text, power, emit, out, err);
    if (*search) return cmd_zaremba_search(den_text, threads, out);
    if (*xi_cmd) return cmd_xi(base_text, tau_text, lambda_text, stages, variant, seed_text, fmt, out);
    if (*encode_cmd) return cmd_encode(base_text, input, fmt, out);
  } catch (const Failed& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace hurwitz
