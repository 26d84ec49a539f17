#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rowland/accel.hpp"
#include "rowland/engine.hpp"

namespace rowland {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

struct Counterexample {
  Nat n = 0;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct ClaimStats {
  Nat trivial_events = 0;
  Nat reset_events = 0;
  Nat max_prime = 0;       // largest prime normalized increment observed
  Nat reached = 0;         // last index (or count) actually verified
  Nat recorded_total = 0;  // observations that do not affect the verdict

  friend bool operator==(const ClaimStats&, const ClaimStats&) = default;
};

// Deterministic result of one claim checked up to one horizon.
struct ClaimReport {
  std::string claim_id;
  Nat horizon = 0;
  Verdict verdict = Verdict::Pass;
  std::vector<Counterexample> counterexamples;  // capped at kMaxStoredCounterexamples
  Nat counterexample_total = 0;
  std::optional<Nat> first_divergence;
  std::vector<Counterexample> recorded;  // verdict-neutral observations, same cap
  ClaimStats stats;

  friend bool operator==(const ClaimReport&, const ClaimReport&) = default;
};

inline constexpr std::size_t kMaxStoredCounterexamples = 100;

std::string to_json(const ClaimReport& report);

/// Every event's normalized value must be 1 + normalize_offset or prime.
/// Overflow before the horizon yields Inconclusive with the verified prefix.
ClaimReport check_prime_claim(const GeneratorSpec& spec, Nat n_max);

/// Gcd-additive and piecewise (gate Always) runs from the same start must
/// produce identical terms through n_max.
ClaimReport check_equivalence_gcd_piecewise(Nat n1, Nat c1, int slope, Nat n_max);

/// The accel stream must equal the engine's nontrivial diff stream, for the
/// first reset_limit resets. When max_index > 0, only resets with index
/// <= max_index are considered (the engine stops there).
ClaimReport check_accel_vs_engine(AccelAlgorithm algorithm, Nat n1, Nat reset_limit,
                                  Nat max_index = 0);

/// For primorial-gated specs: every nontrivial normalized increment must be
/// prime and exceed p_m, and every reset index must be coprime to primorial(m).
ClaimReport check_prime_floor(const GeneratorSpec& spec, Nat n_max);

/// Record-gcd gate. For the th7 preset the reset diffs must follow 2^k + 1
/// (k counted from base_k; base_k = 1 skips the opening 2). The variant
/// presets are held to the successor rule d' = 2d - 1 instead. Reset indices
/// are recorded alongside.
ClaimReport check_theorem7(const GeneratorSpec& spec, Nat reset_count, int base_k = 0);

/// Exhaustive scan over 3 <= n <= n_max, 1 <= j <= n-1: asserts the identity
/// gcd(n+j, 2n+j-1) = gcd(j+1, n-1), records every pair breaking the n/2
/// bound, and requires (n-1) | (j+1) at each such pair.
ClaimReport scan_lemma1(Nat n_max);

/// Piecewise law: c(n) <= slope*n + offset with equality exactly at reset
/// indices (the initial index counts once the value sits on the reset line).
ClaimReport check_slope_bound(const GeneratorSpec& spec, Nat n_max);

// Parameter grids used by the acceptance suite and the grid CLI verbs.
std::vector<GeneratorSpec> prime_claim_grid();
std::vector<GeneratorSpec> prime_floor_grid();

/// Runs fn over the specs on a small worker pool; reports come back in spec
/// order regardless of scheduling.
std::vector<ClaimReport> run_reports(const std::vector<GeneratorSpec>& specs,
                                     const std::function<ClaimReport(const GeneratorSpec&)>& fn);

}  // namespace rowland
