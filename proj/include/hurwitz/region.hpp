#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/gaussian.hpp"

namespace hurwitz {

enum class Sense { Negative, Positive };

struct QPoint {
  Rational x;
  Rational y;
};

/// {z : a|z|^2 + b conj(z) + conj(b) z + c  <sense>  0} with integer
/// coefficients, primitive, and a > 0 or (a = 0 and b in the half-plane
/// re > 0 or (re = 0 and im > 0)).
class GenCircleConstraint {
 public:
  GenCircleConstraint(Integer a, GaussianInt b, Integer c, Sense sense);

  /// Re z < t, Re z > t, Im z < t, Im z > t for rational t.
  static GenCircleConstraint re_less(const Rational& t);
  static GenCircleConstraint re_greater(const Rational& t);
  static GenCircleConstraint im_less(const Rational& t);
  static GenCircleConstraint im_greater(const Rational& t);
  /// |z - center|^2 > r2 and |z - center|^2 < r2
  static GenCircleConstraint outside_disk(const GaussianInt& center, const Integer& r2);
  static GenCircleConstraint inside_disk(const GaussianInt& center, const Integer& r2);

  const Integer& a() const { return a_; }
  const GaussianInt& b() const { return b_; }
  const Integer& c() const { return c_; }
  Sense sense() const { return sense_; }
  bool is_line() const { return a_ == 0; }

  /// Coefficients of g with the constraint reading g(x, y) < 0:
  /// g = A(x^2 + y^2) + Bx x + By y + C.
  Integer gA() const;
  Integer gBx() const;
  Integer gBy() const;
  Integer gC() const;

  int sign_at(const Rational& x, const Rational& y) const;  // sign of g
  bool holds_at(const Rational& x, const Rational& y) const { return sign_at(x, y) < 0; }
  bool holds_at(const GaussianRational& z) const;

  GenCircleConstraint inverted() const;                        // image under z -> 1/z
  GenCircleConstraint translated(const GaussianInt& t) const;  // image under z -> z + t
  GenCircleConstraint complemented() const;                    // opposite strict sense

  std::string to_string() const;

  friend bool operator==(const GenCircleConstraint&, const GenCircleConstraint&) = default;
  friend std::strong_ordering operator<=>(const GenCircleConstraint& l, const GenCircleConstraint& r);

 private:
  Integer a_;
  GaussianInt b_;
  Integer c_;
  Sense sense_;
};

/// Finite intersection of open constraints. Regions are read as regular
/// open sets: pieces of measure zero are ignored by the comparisons.
class Region {
 public:
  Region() = default;  // whole plane
  explicit Region(std::vector<GenCircleConstraint> constraints);

  static Region open_fundamental_domain();
  static Region nothing();

  const std::vector<GenCircleConstraint>& constraints() const { return constraints_; }
  bool marked_empty() const { return marked_empty_; }

  bool contains(const Rational& x, const Rational& y) const;
  bool contains(const GaussianRational& z) const;
  Region intersect(const Region& other) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<GenCircleConstraint> constraints_;
  bool marked_empty_ = false;
};

Region invert_region(const Region& r);
Region translate_region(const Region& r, const GaussianInt& t);

/// Exact: a rational point satisfying every constraint strictly, if any.
std::optional<QPoint> find_witness(const Region& r);
bool is_empty(const Region& r);
/// r1 minus r2 has empty interior.
bool is_subset(const Region& r1, const Region& r2);
bool regions_equal(const Region& r1, const Region& r2);
/// Sorted, deduplicated, redundancy-pruned (exact).
Region canonicalize(const Region& r);

// Regions inside the open square (-1/2, 1/2)^2.

constexpr int kGridDen = 64;
constexpr int kGridHalf = 31;  // sample x = j/64 for |j| <= 31
constexpr int kGridSide = 2 * kGridHalf + 1;

using Fingerprint = std::vector<std::uint64_t>;

/// Membership bits over the dyadic grid j/64, k/64 in the open square.
Fingerprint fingerprint(const Region& r);

/// Intersection of the open square with `extra`, reduced to a canonical
/// constraint list (square sides first, then sorted essential constraints).
/// nullopt when the intersection is empty.
std::optional<Region> canonical_in_square(std::vector<GenCircleConstraint> extra);

/// The constraints of a canonical square region beyond the four sides.
std::vector<GenCircleConstraint> extra_constraints(const Region& r);

/// Counters for the exact fallback, useful when profiling.
struct RegionStats {
  std::uint64_t witness_calls = 0;
  std::uint64_t decomposition_calls = 0;
};
RegionStats region_stats();

}  // namespace hurwitz
