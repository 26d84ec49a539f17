#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rowland/numtheory.hpp"

namespace rowland {

// Fast generation of the nontrivial increments only, skipping every +1 step.
// A1 serves the classic sequence from 7; A2(n1) the slope-3 family started
// at 3*n1; A3(n1) the slope-2 family started at 2*n1.
enum class AccelAlgorithm { A1 = 1, A2 = 2, A3 = 3 };

struct AccelState {
  AccelAlgorithm algorithm = AccelAlgorithm::A1;
  Nat n1 = 3;         // family parameter (A1 behaves as A2 with n1 = 3)
  Nat i = 0;          // emissions so far
  Nat N = 0;          // N_i of the latest emission (N_1 before the first)
  Nat p = 0;          // last emitted prime
  Nat sum = 0;        // running sum of emissions
  bool exhausted = false;

  friend bool operator==(const AccelState&, const AccelState&) = default;
};

/// A1 ignores n1; A2 requires n1 >= 2; A3 requires n1 >= 3.
AccelState accel_init(AccelAlgorithm algorithm, Nat n1 = 0);

/// Emits the next prime of the stream, advancing N by p - 1 each round.
/// Returns nullopt once the next N would leave the representable range;
/// the state then stays exhausted.
std::optional<Nat> accel_next(AccelState& state);

/// Up to `count` further emissions (shorter on overflow termination).
std::vector<Nat> accel_take(AccelState& state, std::size_t count);

/// Same stream, computed independently through the running-sum recursion
/// p_n = (base - n + sum_{i<n} p_i)^* with base 6 / 2*n1 / n1. Truncates
/// cleanly at overflow, exactly like the iteration form.
std::vector<Nat> accel_by_recursion(AccelAlgorithm algorithm, Nat n1, std::size_t count);

}  // namespace rowland
