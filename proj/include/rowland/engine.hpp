#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rowland/numtheory.hpp"

namespace rowland {

enum class StepRule { GcdAdditive, PiecewiseReset };

enum class GateKind { Always, GapAtLeast, CoprimePrimorial, RecordGcd };

// Extra condition ANDed with gcd(n, c(n-1)) > 1 before a reset may fire.
struct Gate {
  GateKind kind = GateKind::Always;
  Nat gap_threshold = 0;        // GapAtLeast: require n - last_reset >= threshold
  bool waive_until_first_reset = false;  // GapAtLeast variant, see make_th3
  Nat primorial_index = 0;      // CoprimePrimorial: require gcd(n, primorial(m)) == 1

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class Preset {
  Custom,
  Th1,      // gcd-additive, a(1) = 7
  Th2,      // gcd-additive, b(3) = 6
  Th1a,     // piecewise slope 3, a(1) = 7 (free-form start)
  Th2a,     // piecewise slope 2, b(3) = 6
  Th1b,     // piecewise slope 3, c(n1) = 3*n1
  Th2b,     // piecewise slope 2, c(n1) = 2*n1
  Th3,      // slope 3, offset +nu, gap gate
  Th4,      // slope 2, offset +nu, gap gate (threshold nu+1)
  Th5,      // slope 3, offset -nu, primorial gate -> primes above p_m
  Th6,      // slope 2, offset -nu, primorial gate
  Th7,      // slope 2, record-gcd gate, c(3) = 6
  Th7C7,    // record-gcd variant, c(7) = 12
  Th7C5S3,  // record-gcd variant, c(5) = 12, slope 3
};

struct GeneratorSpec {
  StepRule step_rule = StepRule::PiecewiseReset;
  int slope = 3;               // 2 or 3; ignored for GcdAdditive
  std::int64_t offset = 0;     // resets assign c = slope*n + offset
  Gate gate;
  Nat n1 = 1;                  // initial index
  Nat c1 = 1;                  // initial value c(n1)
  std::int64_t normalize_offset = 0;  // added to raw diffs for claim checking
  Preset preset = Preset::Custom;
  bool freeform_warning = false;  // set by validate_spec for non-preset specs

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

enum class SpecErrorCode {
  SlopeInvalid,
  StepRuleMismatch,
  GateMismatch,
  NuNotPositive,
  NuNotEven,
  NuTooLarge,
  N1TooSmall,
  N1Mismatch,
  C1Mismatch,
  C1Invalid,
  MTooSmall,
  MTooLarge,
  NormalizeMismatch,
};

struct SpecError : std::invalid_argument {
  SpecErrorCode code;
  SpecError(SpecErrorCode code_, const std::string& what) : std::invalid_argument(what), code(code_) {}
};

// Preset constructors. Each yields a spec that validate_spec accepts.
GeneratorSpec make_th1();
GeneratorSpec make_th2();
GeneratorSpec make_th1a();
GeneratorSpec make_th2a();
GeneratorSpec make_th1b(Nat n1);
GeneratorSpec make_th2b(Nat n1);

enum class GapThresholdChoice {
  Stated,        // (nu - 2) / 2, gap measured from n1 before the first reset
  PaperExample,  // nu + 1, gap check waived until the first reset has fired
};
GeneratorSpec make_th3(Nat nu, Nat n1, GapThresholdChoice choice = GapThresholdChoice::Stated);
GeneratorSpec make_th4(Nat nu, Nat n1);
GeneratorSpec make_th5(Nat m, Nat nu, Nat n1);
GeneratorSpec make_th6(Nat m, Nat nu, Nat n1);
GeneratorSpec make_th7();
GeneratorSpec make_th7_c7();
GeneratorSpec make_th7_c5_slope3();

/// Checks every preset-specific bound; returns the spec with
/// freeform_warning set when it matches no theorem preset shape.
/// Throws SpecError naming the violated bound otherwise.
GeneratorSpec validate_spec(GeneratorSpec spec);

std::string preset_name(Preset preset);            // "th1" .. "th7-c5s3", "custom"
Preset preset_from_name(const std::string& name);  // throws DomainError on unknown names

/// Compact deterministic description, e.g. "th3(nu=4,n1=6,gap=1)".
std::string describe(const GeneratorSpec& spec);

struct EngineState {
  Nat n = 0;
  Nat c = 0;
  Nat last_reset = 0;   // most recent reset index; n1 until a reset fires
  Nat record_gcd = 1;   // running max of gcd(m, c(m-1)); used by RecordGcd
  bool reset_seen = false;

  friend bool operator==(const EngineState&, const EngineState&) = default;
};

EngineState init_state(const GeneratorSpec& spec);

enum class IncrementKind { Trivial, Reset };

struct IncrementEvent {
  Nat n = 0;                    // index after the step
  std::int64_t diff = 0;        // c(n) - c(n-1)
  std::int64_t normalized = 0;  // diff + normalize_offset
  Nat gcd_seen = 0;             // gcd(n, c(n-1))
  IncrementKind kind = IncrementKind::Trivial;

  friend bool operator==(const IncrementEvent&, const IncrementEvent&) = default;
};

/// Advances the state by one index and reports the increment taken.
IncrementEvent step(EngineState& state, const GeneratorSpec& spec);

/// Terms (n, c(n)) for n in [n1, n_max], deterministically.
std::vector<std::pair<Nat, Nat>> generate(const GeneratorSpec& spec, Nat n_max);

/// Increment events for steps n1+1 .. n_max. With nontrivial_only, only
/// kind == Reset events are kept.
std::vector<IncrementEvent> increments(const GeneratorSpec& spec, Nat n_max, bool nontrivial_only);

}  // namespace rowland
