#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/continued_fraction.hpp"
#include "hurwitz/region.hpp"

namespace hurwitz {

/// C°_1(a) = F° ∩ ι(τ_a(F°)). Throws for a outside the digit set.
Region cylinder_one(const GaussianInt& a);

/// τ_{-d} ι(s ∩ C°_1(d)) for a canonical square region s; nullopt when empty.
std::optional<Region> prototype_step(const Region& s, const GaussianInt& d);

struct PrototypeState {
  int id = 0;
  std::string label;
  Region region;
  Fingerprint fingerprint;
  std::string description;
};

struct Transition {
  int from;
  GaussianInt digit;
  int to;  // -1: empty
};

class PrototypeAutomaton {
 public:
  /// Breadth-first closure from F° over digits with max(|Re|,|Im|) <= 4.
  static PrototypeAutomaton explore();
  /// Shared instance, built on first use.
  static const PrototypeAutomaton& instance();

  const std::vector<PrototypeState>& states() const { return states_; }
  const PrototypeState& state(int id) const { return states_.at(static_cast<size_t>(id)); }
  static constexpr int full() { return 0; }

  /// nullopt: the open region is empty. Throws for d outside the digit set.
  std::optional<int> step(int state, const GaussianInt& d) const;

  /// Every explored transition, in (state, digit) order.
  const std::vector<Transition>& transitions() const { return transitions_; }

  /// State with exactly this region, if any.
  std::optional<int> find(const Region& r) const;

  /// "state,digit,next" lines; next is "-" for the empty set.
  std::string export_table() const;

  /// Number of fingerprint matches that were confirmed by exact comparison.
  size_t exact_confirmations() const { return exact_confirmations_; }

 private:
  static int small_index(const GaussianInt& d);  // -1 unless max(|Re|,|Im|) <= 2
  static int large_class(const GaussianInt& d);  // by the signs of Re and Im

  std::vector<PrototypeState> states_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<int>> small_;  // [state][small_index]
  std::vector<std::vector<int>> large_;  // [state][large_class]
  size_t exact_confirmations_ = 0;
};

enum class Validity { Valid, ValidBoundaryOnly, Invalid };

std::string to_string(Validity v);

struct ValidityReport {
  Validity verdict = Validity::Valid;
  std::vector<int> states;        // state after each digit while the open run lasts
  std::optional<size_t> died_at;  // index of the digit where the open run became empty
  std::optional<GaussianRational> boundary_point;  // closed-cylinder witness
  std::string trace() const;
};

ValidityReport is_valid(std::span<const GaussianInt> digits);

/// Final open state equals F°. False when the open run dies.
bool is_full(std::span<const GaussianInt> digits);

struct MirrorCheck {
  bool negated_reversal_full = false;
  bool conjugate_full = false;
};

/// For a full sequence, checks that ←(−x) and conj(x) are full; a failure
/// throws std::logic_error.
MirrorCheck mirror_conjugate_state(std::span<const GaussianInt> digits);

enum class FoldMap { F, G };

/// f(x) = (x, d, -←x); g(x) = x⁺ ←x₋
Digits apply_fold_map(FoldMap m, std::span<const GaussianInt> x, const GaussianInt& d);

struct ProgramResult {
  std::vector<FoldMap> program;  // applied left to right
  Digits sequence;
  std::string final_state;   // label, or "empty"
  std::string mirror_state;  // state of ←(−h(a))
  bool passed = false;
  std::string failure;  // offending prefix when not passed
};

struct FoldingReport {
  std::vector<ProgramResult> results;
  bool all_passed = true;
};

ProgramResult check_program(std::span<const GaussianInt> seed, const std::vector<FoldMap>& program,
                            const GaussianInt& d);

/// Every program over {f, g} of length 1..depth. Runs in parallel; the
/// report order is by length, then lexicographic with f < g.
FoldingReport verify_folding_program(std::span<const GaussianInt> seed, int depth, const GaussianInt& d,
                                     unsigned threads = 0);

std::string program_to_string(const std::vector<FoldMap>& program);

/// Worker count: HURWITZ_THREADS if set, else the hardware concurrency.
unsigned default_threads();

}  // namespace hurwitz
