#include "rowland/numtheory.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

namespace rowland {

Nat checked_add(Nat a, Nat b) {
  Nat r = a + b;
  if (r < a || r > kNatMax) throw OverflowError();
  return r;
}

Nat checked_mul(Nat a, Nat b) {
  if (a != 0 && b > kNatMax / a) throw OverflowError();
  return a * b;
}

Nat checked_add_signed(Nat a, std::int64_t d) {
  if (d >= 0) return checked_add(a, static_cast<Nat>(d));
  Nat mag = static_cast<Nat>(-(d + 1)) + 1;  // |d| without overflow at INT64_MIN
  if (mag > a) throw OverflowError("overflow: result would be negative");
  return a - mag;
}

Nat gcd(Nat a, Nat b) noexcept { return std::gcd(a, b); }

namespace {

struct SieveTable {
  Nat bound = 0;                   // spf[] valid for 0 <= n < bound
  std::vector<std::uint32_t> spf;  // smallest prime factor; spf[p] == p for primes
  std::vector<Nat> primes;         // all primes below bound, ascending
};

std::mutex g_sieve_mutex;
std::shared_ptr<const SieveTable> g_sieve;

std::shared_ptr<const SieveTable> build_sieve(Nat bound) {
  bound = std::clamp<Nat>(bound, 16, 2'000'000'000);
  auto t = std::make_shared<SieveTable>();
  t->bound = bound;
  t->spf.assign(bound, 0);
  for (Nat i = 2; i < bound; ++i) {
    if (t->spf[i] != 0) continue;
    t->spf[i] = static_cast<std::uint32_t>(i);
    t->primes.push_back(i);
    if (i * i < bound)
      for (Nat j = i * i; j < bound; j += i)
        if (t->spf[j] == 0) t->spf[j] = static_cast<std::uint32_t>(i);
  }
  return t;
}

std::shared_ptr<const SieveTable> sieve() {
  std::lock_guard<std::mutex> lock(g_sieve_mutex);
  if (!g_sieve) g_sieve = build_sieve(kDefaultSieveBound);
  return g_sieve;
}

Nat mul_mod(Nat a, Nat b, Nat m) {
  return static_cast<Nat>(static_cast<unsigned __int128>(a) * b % m);
}

Nat pow_mod(Nat base, Nat exp, Nat m) {
  Nat r = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for odd n >= 3; this witness set decides
// primality exactly for every 64-bit input.
bool miller_rabin(Nat n) {
  Nat d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (Nat a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    a %= n;
    if (a == 0) continue;
    Nat x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime_u64(Nat n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  return miller_rabin(n);
}

// Brent-cycle Pollard rho; n must be composite, odd, with no tiny factors.
Nat pollard_rho(Nat n) {
  for (Nat c = 1;; ++c) {
    Nat x = 2, y = 2, d = 1, q = 1, ys = y;
    const Nat step = 128;
    auto f = [&](Nat v) { return (mul_mod(v, v, n) + c) % n; };
    Nat r = 1;
    while (d == 1) {
      x = y;
      for (Nat i = 0; i < r; ++i) y = f(y);
      for (Nat k = 0; k < r && d == 1; k += step) {
        ys = y;
        Nat lim = std::min(step, r - k);
        for (Nat i = 0; i < lim; ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        d = gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      // backtrack one step at a time
      do {
        ys = f(ys);
        d = gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void smallest_prime_factor_rec(Nat n, Nat& best) {
  if (n == 1 || n >= best) return;
  if (is_prime_u64(n)) {
    best = std::min(best, n);
    return;
  }
  Nat d = pollard_rho(n);
  smallest_prime_factor_rec(d, best);
  smallest_prime_factor_rec(n / d, best);
}

}  // namespace

void init_sieve(Nat bound) {
  std::lock_guard<std::mutex> lock(g_sieve_mutex);
  if (!g_sieve || g_sieve->bound != std::clamp<Nat>(bound, 16, 2'000'000'000))
    g_sieve = build_sieve(bound);
}

Nat sieve_bound() { return sieve()->bound; }

bool is_prime(Nat n) {
  if (n < 2) return false;
  auto t = sieve();
  if (n < t->bound) return t->spf[n] == n;
  return is_prime_u64(n);
}

Nat least_prime_factor(Nat n) {
  if (n < 2) throw DomainError("least_prime_factor requires n >= 2");
  auto t = sieve();
  if (n < t->bound) return t->spf[n];
  for (Nat p : t->primes) {
    if (p * p > n) return n;
    if (n % p == 0) return p;
  }
  // No factor below the sieve bound: settle primality outright, and only
  // factor when n is composite (both prime factors above the bound).
  if (is_prime_u64(n)) return n;
  Nat best = n;
  Nat d = pollard_rho(n);
  smallest_prime_factor_rec(d, best);
  smallest_prime_factor_rec(n / d, best);
  return best;
}

Nat nth_prime(Nat m) {
  if (m == 0) throw DomainError("nth_prime requires m >= 1");
  auto t = sieve();
  if (m <= t->primes.size()) return t->primes[m - 1];
  // Segmented extension above the table; valid while high <= bound^2.
  constexpr Nat kSegment = 1 << 20;
  std::vector<char> composite(kSegment);
  Nat count = t->primes.size();
  Nat low = t->bound;
  while (true) {
    if (low > kNatMax - kSegment || low > t->bound * t->bound - kSegment)
      throw OverflowError("nth_prime: index beyond supported range");
    Nat high = low + kSegment;
    std::fill(composite.begin(), composite.end(), 0);
    for (Nat p : t->primes) {
      if (p * p >= high) break;
      Nat start = std::max(p * p, (low + p - 1) / p * p);
      for (Nat j = start; j < high; j += p) composite[j - low] = 1;
    }
    for (Nat i = 0; i < kSegment; ++i)
      if (!composite[i] && ++count == m) return low + i;
    low = high;
  }
}

Nat primorial(Nat m) {
  if (m == 0) throw DomainError("primorial requires m >= 1");
  Nat acc = 1;
  for (Nat i = 1; i <= m; ++i) acc = checked_mul(acc, nth_prime(i));
  return acc;
}

}  // namespace rowland
