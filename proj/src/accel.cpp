#include "rowland/accel.hpp"

namespace rowland {

namespace {

void check_n1(AccelAlgorithm alg, Nat n1) {
  if (alg == AccelAlgorithm::A2 && n1 < 2) throw DomainError("algorithm 2 requires n1 >= 2");
  if (alg == AccelAlgorithm::A3 && n1 < 3) throw DomainError("algorithm 3 requires n1 >= 3");
}

}  // namespace

AccelState accel_init(AccelAlgorithm alg, Nat n1) {
  check_n1(alg, n1);
  AccelState st;
  st.algorithm = alg;
  switch (alg) {
    case AccelAlgorithm::A1:
      st.n1 = 3;
      st.N = 4;
      break;
    case AccelAlgorithm::A2:
      st.n1 = n1;
      st.N = checked_mul(2, n1 - 1);
      break;
    case AccelAlgorithm::A3:
      st.n1 = n1;
      st.N = n1 - 2;
      break;
  }
  return st;
}

std::optional<Nat> accel_next(AccelState& st) {
  if (st.exhausted) return std::nullopt;
  Nat next_n = 0, p = 0;
  try {
    next_n = st.i == 0 ? st.N : checked_add(st.N, st.p - 1);
    p = least_prime_factor(checked_add(next_n, 1));
  } catch (const OverflowError&) {
    st.exhausted = true;
    return std::nullopt;
  }
  st.N = next_n;
  st.p = p;
  st.i += 1;
  try {
    st.sum = checked_add(st.sum, p);
  } catch (const OverflowError&) {
    st.exhausted = true;  // this value still counts; no further step is representable
  }
  return p;
}

std::vector<Nat> accel_take(AccelState& st, std::size_t count) {
  std::vector<Nat> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto p = accel_next(st);
    if (!p) break;
    out.push_back(*p);
  }
  return out;
}

std::vector<Nat> accel_by_recursion(AccelAlgorithm alg, Nat n1, std::size_t count) {
  check_n1(alg, n1);
  Nat base = 0;
  switch (alg) {
    case AccelAlgorithm::A1:
      base = 6;
      break;
    case AccelAlgorithm::A2:
      base = checked_mul(2, n1);
      break;
    case AccelAlgorithm::A3:
      base = n1;
      break;
  }
  std::vector<Nat> out;
  out.reserve(count);
  Nat running = 0;
  for (std::size_t n = 1; n <= count; ++n) {
    Nat arg;
    try {
      arg = checked_add_signed(running, static_cast<std::int64_t>(base) - static_cast<std::int64_t>(n));
    } catch (const OverflowError&) {
      break;
    }
    Nat p = least_prime_factor(arg);
    out.push_back(p);
    try {
      running = checked_add(running, p);
    } catch (const OverflowError&) {
      break;
    }
  }
  return out;
}

}  // namespace rowland
