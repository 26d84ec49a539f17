#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rowland {

// All sequence arithmetic lives in [0, 2^63): the spare bit guarantees that
// the signed difference of any two representable values fits in int64_t.
using Nat = std::uint64_t;

inline constexpr Nat kNatMax = (Nat{1} << 63) - 1;

inline constexpr Nat kDefaultSieveBound = 10'000'000;

/// Thrown when a result would leave [0, kNatMax]. Never wraps silently.
struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("overflow: result exceeds the 63-bit range") {}
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);
/// a + d with signed d; errors when the result leaves [0, kNatMax].
Nat checked_add_signed(Nat a, std::int64_t d);

Nat gcd(Nat a, Nat b) noexcept;  // gcd(a, 0) == a, gcd(0, 0) == 0

// Smallest-prime-factor table below `bound`, built once on first query (or
// here, explicitly). Rebuilding with a different bound is only safe before
// any concurrent use; afterwards the table is immutable.
void init_sieve(Nat bound = kDefaultSieveBound);
Nat sieve_bound();

bool is_prime(Nat n);

/// Smallest prime dividing n. Requires n >= 2.
Nat least_prime_factor(Nat n);

/// m-th prime, 1-based: nth_prime(1) == 2.
Nat nth_prime(Nat m);

/// Product of the first m primes. Overflows at m >= 16.
Nat primorial(Nat m);

}  // namespace rowland
