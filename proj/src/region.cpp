#include "hurwitz/region.hpp"

#include <algorithm>
#include <atomic>

#include "hurwitz/enclosure.hpp"

namespace hurwitz {

namespace {

std::atomic<std::uint64_t> g_witness_calls{0};
std::atomic<std::uint64_t> g_decomposition_calls{0};

Integer gcd4(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  return g;
}

Sense flip(Sense s) { return s == Sense::Negative ? Sense::Positive : Sense::Negative; }

// A(x^2 + y^2) + Bx x + By y + C, read as "< 0"
struct Form {
  Integer A, Bx, By, C;
};

Form form_of(const GenCircleConstraint& k) { return {k.gA(), k.gBx(), k.gBy(), k.gC()}; }

int sign_form(const Form& f, const Rational& x, const Rational& y) {
  Rational v = Rational(f.A) * (x * x + y * y) + Rational(f.Bx) * x + Rational(f.By) * y + Rational(f.C);
  return sgn(v);
}

// p + q sqrt(D), D >= 0
struct QuadIrr {
  Rational p;
  Rational q;
  Integer D;
};

QuadIrr make_qi(Rational p, Rational q, Integer D) {
  if (q == 0 || D == 0) return {std::move(p), 0, 0};
  if (mpz_perfect_square_p(D.get_mpz_t())) {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), D.get_mpz_t());
    return {p + q * Rational(s), 0, 0};
  }
  return {std::move(p), std::move(q), std::move(D)};
}

QuadIrr rational_qi(Rational p) { return {std::move(p), 0, 0}; }

// sign(A + B sqrt X)
int sign2(const Rational& A, const Rational& B, const Integer& X) {
  const int sa = sgn(A);
  const int sb = (X == 0) ? 0 : sgn(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = A * A, rhs = B * B * Rational(X);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

// sign(A + B sqrt X + C sqrt Y)
int sign3(const Rational& A, const Rational& B, const Integer& X, const Rational& C, const Integer& Y) {
  if (C == 0 || Y == 0) return sign2(A, B, X);
  if (B == 0 || X == 0) return sign2(A, C, Y);
  if (X == Y) return sign2(A, B + C, X);
  const int sl = sign2(A, B, X);
  const int sr = -sgn(C);  // R = -C sqrt Y, compare L with R
  if (sl != sr) return sl > sr ? 1 : -1;
  if (sl == 0) return 0;
  // same sign: compare squares, L^2 - R^2 = A^2 + B^2 X - C^2 Y + 2AB sqrt X
  const int t = sign2(A * A + B * B * Rational(X) - C * C * Rational(Y), 2 * A * B, X);
  return sl * t;
}

int compare(const QuadIrr& a, const QuadIrr& b) { return sign3(a.p - b.p, a.q, a.D, -b.q, b.D); }

Interval approx(const QuadIrr& v, unsigned bits) {
  if (v.q == 0) return Interval::point(v.p);
  Interval s = sqrt_enclosure(Rational(v.D), bits);
  if (v.q > 0) return {v.p + v.q * s.lo, v.p + v.q * s.hi};
  return {v.p + v.q * s.hi, v.p + v.q * s.lo};
}

// dyadic with the fewest bits strictly inside (lo, hi)
Rational simple_between(const Rational& lo, const Rational& hi) {
  for (unsigned long k = 0;; ++k) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
    Integer j = floor(lo * Rational(scale)) + 1;
    Rational cand = make_rational(j, scale);
    if (cand < hi) return cand;
  }
}

Rational rational_between(const QuadIrr& a, const QuadIrr& b) {
  for (unsigned bits = 8;; bits *= 2) {
    Interval ia = approx(a, bits), ib = approx(b, bits);
    if (ia.hi < ib.lo) return simple_between(ia.hi, ib.lo);
  }
}

void sort_unique(std::vector<QuadIrr>& v) {
  std::sort(v.begin(), v.end(), [](const QuadIrr& a, const QuadIrr& b) { return compare(a, b) < 0; });
  v.erase(std::unique(v.begin(), v.end(), [](const QuadIrr& a, const QuadIrr& b) { return compare(a, b) == 0; }),
          v.end());
}

std::vector<Rational> samples_around(std::vector<QuadIrr>& crit) {
  sort_unique(crit);
  std::vector<Rational> out;
  if (crit.empty()) {
    out.emplace_back(0);
    return out;
  }
  out.push_back(Rational(floor(approx(crit.front(), 8).lo) - 1));
  for (size_t k = 0; k + 1 < crit.size(); ++k) out.push_back(rational_between(crit[k], crit[k + 1]));
  out.push_back(Rational(floor(approx(crit.back(), 8).hi) + 1));
  return out;
}

// real roots of qa t^2 + qb t + qc (integer coefficients), appended
void push_roots(const Integer& qa, const Integer& qb, const Integer& qc, std::vector<QuadIrr>& out) {
  if (qa == 0) {
    if (qb != 0) out.push_back(rational_qi(make_rational(-qc, qb)));
    return;
  }
  Integer disc = qb * qb - 4 * qa * qc;
  if (disc < 0) return;
  Rational p = make_rational(-qb, 2 * qa);
  Rational q = make_rational(Integer(1), 2 * qa);
  out.push_back(make_qi(p, q, disc));
  if (disc > 0) out.push_back(make_qi(p, -q, disc));
}

// x-coordinates where line lx x + ly y + lc = 0 meets circle f
void line_circle_x(const Integer& lx, const Integer& ly, const Integer& lc, const Form& f,
                   std::vector<QuadIrr>& out) {
  if (ly == 0) {
    if (lx != 0) out.push_back(rational_qi(make_rational(-lc, lx)));
    return;
  }
  const Integer qa = f.A * (ly * ly + lx * lx);
  const Integer qb = 2 * f.A * lx * lc + f.Bx * ly * ly - f.By * ly * lx;
  const Integer qc = f.A * lc * lc - f.By * ly * lc + f.C * ly * ly;
  push_roots(qa, qb, qc, out);
}

void critical_x(const Form& f, std::vector<QuadIrr>& out) {
  if (f.A != 0) {
    // leftmost and rightmost points of the circle
    Integer disc = f.Bx * f.Bx + f.By * f.By - 4 * f.A * f.C;
    Rational p = make_rational(-f.Bx, 2 * f.A);
    if (disc < 0) return;
    Rational q = make_rational(Integer(1), 2 * abs(f.A));
    out.push_back(make_qi(p, q, disc));
    out.push_back(make_qi(p, -q, disc));
  } else if (f.By == 0 && f.Bx != 0) {
    out.push_back(rational_qi(make_rational(-f.C, f.Bx)));
  }
}

void critical_x(const Form& f, const Form& g, std::vector<QuadIrr>& out) {
  if (f.A != 0 && g.A != 0) {
    Integer lx = g.A * f.Bx - f.A * g.Bx;
    Integer ly = g.A * f.By - f.A * g.By;
    Integer lc = g.A * f.C - f.A * g.C;
    if (lx == 0 && ly == 0) return;  // concentric
    line_circle_x(lx, ly, lc, f, out);
  } else if (f.A != 0) {
    line_circle_x(g.Bx, g.By, g.C, f, out);
  } else if (g.A != 0) {
    line_circle_x(f.Bx, f.By, f.C, g, out);
  } else {
    Integer det = f.Bx * g.By - g.Bx * f.By;
    if (det == 0) return;
    out.push_back(rational_qi(make_rational(-f.C * g.By + g.C * f.By, det)));
  }
}

// Values of a t^2 + b t + c at rational y, with a, b, c rational.
struct YPoly {
  Rational a, b, c;
  int sign_at(const Rational& y) const { return sgn(a * y * y + b * y + c); }
};

std::optional<Rational> witness_on_vertical(const std::vector<Form>& forms, const Rational& x0) {
  std::vector<YPoly> polys;
  polys.reserve(forms.size());
  std::vector<QuadIrr> crit;
  for (const auto& f : forms) {
    YPoly p{Rational(f.A), Rational(f.By), Rational(f.A) * x0 * x0 + Rational(f.Bx) * x0 + Rational(f.C)};
    if (p.a == 0 && p.b == 0) {
      if (p.c >= 0) return std::nullopt;  // fails on the whole line
      continue;
    }
    if (p.a == 0) {
      crit.push_back(rational_qi(-p.c / p.b));
    } else {
      Rational disc = p.b * p.b - 4 * p.a * p.c;
      if (disc < 0) {
        if (p.a > 0) return std::nullopt;
        continue;
      }
      Rational base = -p.b / (2 * p.a);
      if (disc == 0) {
        if (p.a > 0) return std::nullopt;
        crit.push_back(rational_qi(base));
      } else {
        const Integer& n = disc.get_num();
        const Integer& d = disc.get_den();
        // sqrt(n/d) = sqrt(n d) / d
        Rational q = 1 / (2 * p.a * Rational(d));
        crit.push_back(make_qi(base, q, n * d));
        crit.push_back(make_qi(base, -q, n * d));
      }
    }
    polys.push_back(std::move(p));
  }
  for (const auto& y : samples_around(crit)) {
    bool ok = true;
    for (const auto& p : polys) {
      if (p.sign_at(y) >= 0) {
        ok = false;
        break;
      }
    }
    if (ok) return y;
  }
  return std::nullopt;
}

std::optional<QPoint> decomposition_witness(std::vector<Form> forms) {
  g_decomposition_calls.fetch_add(1, std::memory_order_relaxed);
  // forms with constant sign
  std::vector<Form> live;
  for (auto& f : forms) {
    if (f.A == 0 && f.Bx == 0 && f.By == 0) {
      if (f.C >= 0) return std::nullopt;
      continue;
    }
    if (f.A != 0) {
      Integer disc = f.Bx * f.Bx + f.By * f.By - 4 * f.A * f.C;
      if (disc <= 0) {
        if (f.A > 0) return std::nullopt;
        continue;
      }
    }
    live.push_back(std::move(f));
  }
  if (live.empty()) return QPoint{0, 0};
  std::vector<QuadIrr> crit;
  for (size_t i = 0; i < live.size(); ++i) {
    critical_x(live[i], crit);
    for (size_t j = i + 1; j < live.size(); ++j) critical_x(live[i], live[j], crit);
  }
  for (const auto& x : samples_around(crit)) {
    if (auto y = witness_on_vertical(live, x)) return QPoint{x, *y};
  }
  return std::nullopt;
}

std::vector<Form> forms_of(const std::vector<GenCircleConstraint>& cs) {
  std::vector<Form> out;
  out.reserve(cs.size());
  for (const auto& k : cs) out.push_back(form_of(k));
  return out;
}

std::optional<QPoint> witness_of(const std::vector<GenCircleConstraint>& cs) {
  g_witness_calls.fetch_add(1, std::memory_order_relaxed);
  return decomposition_witness(forms_of(cs));
}

// ---- square helpers

const std::vector<GenCircleConstraint>& square_sides() {
  static const std::vector<GenCircleConstraint> sides = {
      GenCircleConstraint::re_greater(Rational(-1, 2)), GenCircleConstraint::re_less(Rational(1, 2)),
      GenCircleConstraint::im_greater(Rational(-1, 2)), GenCircleConstraint::im_less(Rational(1, 2))};
  return sides;
}

// range of a t^2 + b t over [-1/2, 1/2]
std::pair<Rational, Rational> axis_range(const Integer& a, const Integer& b) {
  Rational A(a), B(b);
  Rational v1 = A / 4 + B / 2, v2 = A / 4 - B / 2;
  Rational lo = std::min(v1, v2), hi = std::max(v1, v2);
  if (a != 0) {
    Rational t = -B / (2 * A);
    if (t >= Rational(-1, 2) && t <= Rational(1, 2)) {
      Rational v = -B * B / (4 * A);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  return {lo, hi};
}

constexpr size_t kGridPoints = static_cast<size_t>(kGridSide) * kGridSide;
constexpr size_t kGridWords = (kGridPoints + 63) / 64;

struct GridBits {
  Fingerprint neg;  // g < 0
  Fingerprint pos;  // g > 0
};

GridBits grid_bits(const Form& f) {
  GridBits out{Fingerprint(kGridWords, 0), Fingerprint(kGridWords, 0)};
  const bool small = f.A.fits_slong_p() && f.Bx.fits_slong_p() && f.By.fits_slong_p() && f.C.fits_slong_p();
  for (int i = -kGridHalf; i <= kGridHalf; ++i) {
    for (int j = -kGridHalf; j <= kGridHalf; ++j) {
      int s;
      if (small) {
        // 4096 g(i/64, j/64)
        __int128 v = static_cast<__int128>(f.A.get_si()) * (i * i + j * j) +
                     static_cast<__int128>(kGridDen) * (static_cast<__int128>(f.Bx.get_si()) * i +
                                                        static_cast<__int128>(f.By.get_si()) * j) +
                     static_cast<__int128>(kGridDen * kGridDen) * f.C.get_si();
        s = v < 0 ? -1 : v > 0 ? 1 : 0;
      } else {
        Integer v = f.A * (i * i + j * j) + kGridDen * (f.Bx * i + f.By * j) + kGridDen * kGridDen * f.C;
        s = sgn(v);
      }
      const size_t idx = static_cast<size_t>(i + kGridHalf) * kGridSide + static_cast<size_t>(j + kGridHalf);
      if (s < 0) out.neg[idx / 64] |= std::uint64_t{1} << (idx % 64);
      if (s > 0) out.pos[idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
  }
  return out;
}

Fingerprint all_grid() {
  Fingerprint f(kGridWords, ~std::uint64_t{0});
  if (kGridPoints % 64) f.back() = (std::uint64_t{1} << (kGridPoints % 64)) - 1;
  return f;
}

void and_into(Fingerprint& acc, const Fingerprint& other) {
  for (size_t k = 0; k < acc.size(); ++k) acc[k] &= other[k];
}

bool any_bit(const Fingerprint& f) {
  return std::any_of(f.begin(), f.end(), [](std::uint64_t w) { return w != 0; });
}

bool is_square_side(const GenCircleConstraint& k) {
  const auto& s = square_sides();
  return std::find(s.begin(), s.end(), k) != s.end();
}

}  // namespace

// ---- GenCircleConstraint

GenCircleConstraint::GenCircleConstraint(Integer a, GaussianInt b, Integer c, Sense sense)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), sense_(sense) {
  if (a_ == 0 && b_.is_zero()) throw std::invalid_argument("constant constraint");
  Integer g = gcd4(a_, b_.re, b_.im, c_);
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.re.get_mpz_t(), b_.re.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.im.get_mpz_t(), b_.im.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
  const bool negate = a_ < 0 || (a_ == 0 && (b_.re < 0 || (b_.re == 0 && b_.im < 0)));
  if (negate) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    sense_ = flip(sense_);
  }
}

GenCircleConstraint GenCircleConstraint::re_less(const Rational& t) {
  return {0, GaussianInt(t.get_den()), -2 * t.get_num(), Sense::Negative};
}

GenCircleConstraint GenCircleConstraint::re_greater(const Rational& t) {
  return {0, GaussianInt(t.get_den()), -2 * t.get_num(), Sense::Positive};
}

GenCircleConstraint GenCircleConstraint::im_less(const Rational& t) {
  return {0, GaussianInt(Integer(0), t.get_den()), -2 * t.get_num(), Sense::Negative};
}

GenCircleConstraint GenCircleConstraint::im_greater(const Rational& t) {
  return {0, GaussianInt(Integer(0), t.get_den()), -2 * t.get_num(), Sense::Positive};
}

GenCircleConstraint GenCircleConstraint::outside_disk(const GaussianInt& center, const Integer& r2) {
  return {1, -center, center.norm() - r2, Sense::Positive};
}

GenCircleConstraint GenCircleConstraint::inside_disk(const GaussianInt& center, const Integer& r2) {
  return {1, -center, center.norm() - r2, Sense::Negative};
}

Integer GenCircleConstraint::gA() const { return sense_ == Sense::Negative ? a_ : Integer(-a_); }
Integer GenCircleConstraint::gBx() const { return sense_ == Sense::Negative ? Integer(2 * b_.re) : Integer(-2 * b_.re); }
Integer GenCircleConstraint::gBy() const { return sense_ == Sense::Negative ? Integer(2 * b_.im) : Integer(-2 * b_.im); }
Integer GenCircleConstraint::gC() const { return sense_ == Sense::Negative ? c_ : Integer(-c_); }

int GenCircleConstraint::sign_at(const Rational& x, const Rational& y) const {
  return sign_form(form_of(*this), x, y);
}

bool GenCircleConstraint::holds_at(const GaussianRational& z) const { return holds_at(z.re(), z.im()); }

GenCircleConstraint GenCircleConstraint::inverted() const { return {c_, b_.conj(), a_, sense_}; }

GenCircleConstraint GenCircleConstraint::translated(const GaussianInt& t) const {
  GaussianInt b2 = b_ - GaussianInt(a_) * t;
  // Re(b conj(t))
  Integer re_bt = b_.re * t.re + b_.im * t.im;
  return {a_, b2, c_ + a_ * t.norm() - 2 * re_bt, sense_};
}

GenCircleConstraint GenCircleConstraint::complemented() const { return {a_, b_, c_, flip(sense_)}; }

std::string GenCircleConstraint::to_string() const {
  return "{" + hurwitz::to_string(a_) + "|z|^2 + 2Re(conj(" + hurwitz::to_string(b_) + ") z) + " +
         hurwitz::to_string(c_) + (sense_ == Sense::Negative ? " < 0}" : " > 0}");
}

std::strong_ordering operator<=>(const GenCircleConstraint& l, const GenCircleConstraint& r) {
  auto cmp3 = [](const Integer& x, const Integer& y) {
    int c = cmp(x, y);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  };
  if (auto c = cmp3(l.a_, r.a_); c != 0) return c;
  if (auto c = cmp3(l.b_.re, r.b_.re); c != 0) return c;
  if (auto c = cmp3(l.b_.im, r.b_.im); c != 0) return c;
  if (auto c = cmp3(l.c_, r.c_); c != 0) return c;
  return static_cast<int>(l.sense_) <=> static_cast<int>(r.sense_);
}

// ---- Region

Region::Region(std::vector<GenCircleConstraint> constraints) : constraints_(std::move(constraints)) {}

Region Region::open_fundamental_domain() { return Region(square_sides()); }

Region Region::nothing() {
  Region r;
  r.marked_empty_ = true;
  return r;
}

bool Region::contains(const Rational& x, const Rational& y) const {
  if (marked_empty_) return false;
  return std::all_of(constraints_.begin(), constraints_.end(),
                     [&](const GenCircleConstraint& k) { return k.holds_at(x, y); });
}

bool Region::contains(const GaussianRational& z) const { return contains(z.re(), z.im()); }

Region Region::intersect(const Region& other) const {
  if (marked_empty_ || other.marked_empty_) return nothing();
  std::vector<GenCircleConstraint> cs = constraints_;
  cs.insert(cs.end(), other.constraints_.begin(), other.constraints_.end());
  return Region(std::move(cs));
}

Region invert_region(const Region& r) {
  if (r.marked_empty()) return r;
  std::vector<GenCircleConstraint> cs;
  for (const auto& k : r.constraints()) cs.push_back(k.inverted());
  return Region(std::move(cs));
}

Region translate_region(const Region& r, const GaussianInt& t) {
  if (r.marked_empty()) return r;
  std::vector<GenCircleConstraint> cs;
  for (const auto& k : r.constraints()) cs.push_back(k.translated(t));
  return Region(std::move(cs));
}

std::optional<QPoint> find_witness(const Region& r) {
  if (r.marked_empty()) return std::nullopt;
  return witness_of(r.constraints());
}

bool is_empty(const Region& r) { return !find_witness(r).has_value(); }

bool is_subset(const Region& r1, const Region& r2) {
  if (r1.marked_empty()) return true;
  if (r2.marked_empty()) return is_empty(r1);
  for (const auto& k : r2.constraints()) {
    std::vector<GenCircleConstraint> cs = r1.constraints();
    cs.push_back(k.complemented());
    if (witness_of(cs)) return false;
  }
  return true;
}

bool regions_equal(const Region& r1, const Region& r2) { return is_subset(r1, r2) && is_subset(r2, r1); }

Region canonicalize(const Region& r) {
  if (r.marked_empty()) return r;
  std::vector<GenCircleConstraint> cs = r.constraints();
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  if (!witness_of(cs)) return Region::nothing();
  for (size_t k = 0; k < cs.size();) {
    std::vector<GenCircleConstraint> test;
    for (size_t j = 0; j < cs.size(); ++j)
      if (j != k) test.push_back(cs[j]);
    test.push_back(cs[k].complemented());
    if (!witness_of(test)) {
      cs.erase(cs.begin() + static_cast<long>(k));
    } else {
      ++k;
    }
  }
  return Region(std::move(cs));
}

Fingerprint fingerprint(const Region& r) {
  if (r.marked_empty()) return Fingerprint(kGridWords, 0);
  Fingerprint acc = all_grid();
  for (const auto& k : r.constraints()) and_into(acc, grid_bits(form_of(k)).neg);
  return acc;
}

std::optional<Region> canonical_in_square(std::vector<GenCircleConstraint> extra) {
  std::vector<GenCircleConstraint> list;
  for (auto& k : extra) {
    Form f = form_of(k);
    auto [xlo, xhi] = axis_range(f.A, f.Bx);
    auto [ylo, yhi] = axis_range(f.A, f.By);
    Rational lo = xlo + ylo + Rational(f.C), hi = xhi + yhi + Rational(f.C);
    if (hi <= 0) continue;           // holds on the whole square up to a curve
    if (lo >= 0) return std::nullopt;  // fails on the whole open square
    if (is_square_side(k)) continue;
    list.push_back(std::move(k));
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());

  std::vector<GridBits> bits;
  bits.reserve(list.size());
  for (const auto& k : list) bits.push_back(grid_bits(form_of(k)));

  auto with_sides = [](const std::vector<GenCircleConstraint>& cs) {
    std::vector<GenCircleConstraint> out = square_sides();
    out.insert(out.end(), cs.begin(), cs.end());
    return out;
  };

  Fingerprint acc = all_grid();
  for (const auto& b : bits) and_into(acc, b.neg);
  if (!any_bit(acc) && !witness_of(with_sides(list))) return std::nullopt;

  std::vector<bool> alive(list.size(), true);
  for (size_t k = 0; k < list.size(); ++k) {
    Fingerprint others = all_grid();
    for (size_t j = 0; j < list.size(); ++j)
      if (j != k && alive[j]) and_into(others, bits[j].neg);
    and_into(others, bits[k].pos);
    if (any_bit(others)) continue;  // a grid point separates it
    std::vector<GenCircleConstraint> test;
    for (size_t j = 0; j < list.size(); ++j)
      if (j != k && alive[j]) test.push_back(list[j]);
    test.push_back(list[k].complemented());
    if (!witness_of(with_sides(test))) alive[k] = false;
  }
  std::vector<GenCircleConstraint> kept;
  for (size_t k = 0; k < list.size(); ++k)
    if (alive[k]) kept.push_back(list[k]);
  return Region(with_sides(kept));
}

std::vector<GenCircleConstraint> extra_constraints(const Region& r) {
  std::vector<GenCircleConstraint> out;
  for (const auto& k : r.constraints())
    if (!is_square_side(k)) out.push_back(k);
  return out;
}

RegionStats region_stats() {
  return {g_witness_calls.load(std::memory_order_relaxed), g_decomposition_calls.load(std::memory_order_relaxed)};
}

}  // namespace hurwitz
