#include "rowland/verify.hpp"

#include <atomic>
#include <thread>

#include <json.hpp>

namespace rowland {

namespace {

using ordered_json = nlohmann::ordered_json;

void add_counterexample(ClaimReport& r, Nat n, std::string detail) {
  if (r.counterexamples.size() < kMaxStoredCounterexamples)
    r.counterexamples.push_back({n, std::move(detail)});
  r.counterexample_total += 1;
  r.verdict = Verdict::Fail;
}

void add_recorded(ClaimReport& r, Nat n, std::string detail) {
  if (r.recorded.size() < kMaxStoredCounterexamples) r.recorded.push_back({n, std::move(detail)});
  r.stats.recorded_total += 1;
}

void note_event(ClaimReport& r, const IncrementEvent& ev) {
  if (ev.kind == IncrementKind::Reset)
    r.stats.reset_events += 1;
  else
    r.stats.trivial_events += 1;
}

bool normalized_is_prime(std::int64_t normalized) {
  return normalized >= 2 && is_prime(static_cast<Nat>(normalized));
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string to_json(const ClaimReport& r) {
  ordered_json j;
  j["claim"] = r.claim_id;
  j["horizon"] = r.horizon;
  j["verdict"] = to_string(r.verdict);
  auto dump = [](const std::vector<Counterexample>& list) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : list) arr.push_back({{"n", c.n}, {"detail", c.detail}});
    return arr;
  };
  j["counterexamples"] = dump(r.counterexamples);
  j["counterexample_total"] = r.counterexample_total;
  if (r.first_divergence)
    j["first_divergence"] = *r.first_divergence;
  else
    j["first_divergence"] = nullptr;
  j["recorded"] = dump(r.recorded);
  j["stats"] = {{"trivial", r.stats.trivial_events},
                {"resets", r.stats.reset_events},
                {"max_prime", r.stats.max_prime},
                {"reached", r.stats.reached},
                {"recorded_total", r.stats.recorded_total}};
  return j.dump();
}

ClaimReport check_prime_claim(const GeneratorSpec& spec, Nat n_max) {
  ClaimReport r;
  r.claim_id = "prime-claim " + describe(spec);
  r.horizon = n_max;
  const std::int64_t trivial_value = 1 + spec.normalize_offset;
  EngineState st = init_state(spec);
  try {
    while (st.n < n_max) {
      IncrementEvent ev = step(st, spec);
      note_event(r, ev);
      if (ev.kind == IncrementKind::Trivial && ev.normalized != trivial_value) {
        add_counterexample(r, ev.n, "trivial normalized " + std::to_string(ev.normalized) +
                                        " != " + std::to_string(trivial_value));
        continue;
      }
      if (ev.normalized == trivial_value) continue;
      if (normalized_is_prime(ev.normalized)) {
        r.stats.max_prime = std::max(r.stats.max_prime, static_cast<Nat>(ev.normalized));
        continue;
      }
      add_counterexample(r, ev.n, "normalized " + std::to_string(ev.normalized) +
                                      " (diff " + std::to_string(ev.diff) +
                                      ") is neither " + std::to_string(trivial_value) + " nor prime");
    }
    r.stats.reached = st.n;
  } catch (const OverflowError&) {
    r.stats.reached = st.n;
    if (r.verdict == Verdict::Pass) r.verdict = Verdict::Inconclusive;
  }
  return r;
}

ClaimReport check_equivalence_gcd_piecewise(Nat n1, Nat c1, int slope, Nat n_max) {
  ClaimReport r;
  r.claim_id = "equivalence-gcd-piecewise(n1=" + std::to_string(n1) + ",c1=" + std::to_string(c1) +
               ",slope=" + std::to_string(slope) + ")";
  r.horizon = n_max;

  GeneratorSpec additive;
  additive.step_rule = StepRule::GcdAdditive;
  additive.n1 = n1;
  additive.c1 = c1;
  additive = validate_spec(additive);

  GeneratorSpec piecewise;
  piecewise.step_rule = StepRule::PiecewiseReset;
  piecewise.slope = slope;
  piecewise.n1 = n1;
  piecewise.c1 = c1;
  piecewise = validate_spec(piecewise);

  EngineState a = init_state(additive);
  EngineState b = init_state(piecewise);
  try {
    while (a.n < n_max) {
      IncrementEvent ea = step(a, additive);
      note_event(r, ea);
      step(b, piecewise);
      if (a.c != b.c) {
        r.first_divergence = a.n;
        add_counterexample(r, a.n, "gcd-additive " + std::to_string(a.c) + " vs piecewise " +
                                       std::to_string(b.c));
        break;
      }
    }
    r.stats.reached = a.n;
  } catch (const OverflowError&) {
    r.stats.reached = a.n;
    if (r.verdict == Verdict::Pass) r.verdict = Verdict::Inconclusive;
  }
  return r;
}

ClaimReport check_accel_vs_engine(AccelAlgorithm algorithm, Nat n1, Nat reset_limit, Nat max_index) {
  ClaimReport r;
  GeneratorSpec spec;
  switch (algorithm) {
    case AccelAlgorithm::A1: spec = make_th1(); break;
    case AccelAlgorithm::A2: spec = validate_spec(make_th1b(n1)); break;
    case AccelAlgorithm::A3: spec = validate_spec(make_th2b(n1)); break;
  }
  r.claim_id = "accel-vs-engine(algorithm=" + std::to_string(static_cast<int>(algorithm)) +
               ",engine=" + describe(spec) + ",resets=" + std::to_string(reset_limit) +
               (max_index ? ",max_n=" + std::to_string(max_index) : "") + ")";
  r.horizon = reset_limit;

  AccelState accel = accel_init(algorithm, n1);
  EngineState st = init_state(spec);
  Nat resets = 0;
  try {
    while (resets < reset_limit) {
      IncrementEvent ev = step(st, spec);
      if (max_index != 0 && ev.n > max_index) break;
      note_event(r, ev);
      if (ev.kind != IncrementKind::Reset) continue;
      resets += 1;
      auto p = accel_next(accel);
      if (!p) {
        r.verdict = Verdict::Inconclusive;
        break;
      }
      r.stats.max_prime = std::max(r.stats.max_prime, *p);
      if (static_cast<std::int64_t>(*p) != ev.diff) {
        r.first_divergence = ev.n;
        add_counterexample(r, ev.n, "engine diff " + std::to_string(ev.diff) + " vs accel " +
                                        std::to_string(*p));
        break;
      }
    }
    r.stats.reached = resets;
  } catch (const OverflowError&) {
    r.stats.reached = resets;
    if (r.verdict == Verdict::Pass) r.verdict = Verdict::Inconclusive;
  }
  return r;
}

ClaimReport check_prime_floor(const GeneratorSpec& spec, Nat n_max) {
  if (spec.gate.kind != GateKind::CoprimePrimorial)
    throw DomainError("check_prime_floor requires a coprime-primorial gate");
  ClaimReport r;
  r.claim_id = "prime-floor " + describe(spec);
  r.horizon = n_max;
  const Nat m = spec.gate.primorial_index;
  const Nat pm = nth_prime(m);
  const Nat pp = primorial(m);
  const std::int64_t trivial_value = 1 + spec.normalize_offset;
  EngineState st = init_state(spec);
  try {
    while (st.n < n_max) {
      IncrementEvent ev = step(st, spec);
      note_event(r, ev);
      if (ev.kind == IncrementKind::Trivial) {
        if (ev.normalized != trivial_value)
          add_counterexample(r, ev.n, "trivial normalized " + std::to_string(ev.normalized) +
                                          " != " + std::to_string(trivial_value));
        continue;
      }
      if (gcd(ev.n, pp) != 1)
        add_counterexample(r, ev.n, "reset index shares a factor with primorial(" +
                                        std::to_string(m) + ")");
      if (!normalized_is_prime(ev.normalized) || static_cast<Nat>(ev.normalized) <= pm) {
        add_counterexample(r, ev.n, "normalized " + std::to_string(ev.normalized) +
                                        " is not a prime above " + std::to_string(pm));
      } else {
        r.stats.max_prime = std::max(r.stats.max_prime, static_cast<Nat>(ev.normalized));
      }
    }
    r.stats.reached = st.n;
  } catch (const OverflowError&) {
    r.stats.reached = st.n;
    if (r.verdict == Verdict::Pass) r.verdict = Verdict::Inconclusive;
  }
  return r;
}

ClaimReport check_theorem7(const GeneratorSpec& spec, Nat reset_count, int base_k) {
  if (spec.gate.kind != GateKind::RecordGcd)
    throw DomainError("check_theorem7 requires a record-gcd gate");
  ClaimReport r;
  r.claim_id = "record-gcd-increments " + describe(spec) + "(base_k=" + std::to_string(base_k) + ")";
  r.horizon = reset_count;
  EngineState st = init_state(spec);
  std::vector<std::int64_t> diffs;
  try {
    while (diffs.size() < reset_count) {
      IncrementEvent ev = step(st, spec);
      note_event(r, ev);
      if (ev.kind != IncrementKind::Reset) continue;
      diffs.push_back(ev.diff);
      add_recorded(r, ev.n, "reset diff " + std::to_string(ev.diff));
    }
    r.stats.reached = st.n;
  } catch (const OverflowError&) {
    r.stats.reached = st.n;
    r.verdict = Verdict::Inconclusive;
    return r;
  }

  if (spec.preset == Preset::Th7) {
    // Closed form 2^k + 1, k counted from base_k (the opening diff is 2).
    for (std::size_t j = 0; j < diffs.size(); ++j) {
      if (base_k == 1 && j == 0) continue;
      std::int64_t expected = static_cast<std::int64_t>(Nat{1} << j) + 1;
      if (diffs[j] != expected)
        add_counterexample(r, static_cast<Nat>(j + 1), "reset diff " + std::to_string(diffs[j]) +
                                                           " != " + std::to_string(expected));
    }
  } else {
    for (std::size_t j = 0; j + 1 < diffs.size(); ++j) {
      if (diffs[j + 1] != 2 * diffs[j] - 1)
        add_counterexample(r, static_cast<Nat>(j + 2),
                           "reset diff " + std::to_string(diffs[j + 1]) + " != 2*" +
                               std::to_string(diffs[j]) + "-1");
    }
  }
  for (std::int64_t d : diffs)
    if (normalized_is_prime(d)) r.stats.max_prime = std::max(r.stats.max_prime, static_cast<Nat>(d));
  return r;
}

ClaimReport scan_lemma1(Nat n_max) {
  ClaimReport r;
  r.claim_id = "lemma1-scan(n_max=" + std::to_string(n_max) + ")";
  r.horizon = n_max;
  if (n_max < 3) throw DomainError("scan_lemma1 requires n_max >= 3");
  for (Nat n = 3; n <= n_max; ++n) {
    for (Nat j = 1; j <= n - 1; ++j) {
      Nat lhs = gcd(n + j, 2 * n + j - 1);
      Nat rhs = gcd(j + 1, n - 1);
      if (lhs != rhs) {
        add_counterexample(r, n, "j=" + std::to_string(j) + ": gcd(n+j,2n+j-1)=" +
                                     std::to_string(lhs) + " != gcd(j+1,n-1)=" + std::to_string(rhs));
        continue;
      }
      if (2 * lhs > n) {  // breaks the printed n/2 bound
        add_recorded(r, n, "j=" + std::to_string(j) + ": gcd=" + std::to_string(lhs) + " > n/2");
        if ((j + 1) % (n - 1) != 0)
          add_counterexample(r, n, "bound violation at j=" + std::to_string(j) +
                                       " without (n-1) | (j+1)");
      }
    }
  }
  r.stats.reached = n_max;
  return r;
}

ClaimReport check_slope_bound(const GeneratorSpec& spec, Nat n_max) {
  if (spec.step_rule != StepRule::PiecewiseReset)
    throw DomainError("check_slope_bound requires a piecewise spec");
  ClaimReport r;
  r.claim_id = "slope-bound " + describe(spec);
  r.horizon = n_max;
  auto line = [&](Nat n) {
    return checked_add_signed(checked_mul(static_cast<Nat>(spec.slope), n), spec.offset);
  };
  EngineState st = init_state(spec);
  bool anchored = spec.c1 == line(spec.n1);
  if (spec.c1 > line(spec.n1))
    add_counterexample(r, spec.n1, "initial value " + std::to_string(spec.c1) + " above the line " +
                                       std::to_string(line(spec.n1)));
  try {
    while (st.n < n_max) {
      IncrementEvent ev = step(st, spec);
      note_event(r, ev);
      Nat bound = line(ev.n);
      if (st.c > bound) {
        add_counterexample(r, ev.n, "c=" + std::to_string(st.c) + " exceeds " + std::to_string(bound));
        continue;
      }
      bool equal = st.c == bound;
      bool reset = ev.kind == IncrementKind::Reset;
      if (equal != reset && (anchored || equal))
        add_counterexample(r, ev.n, equal ? "on the line without a reset" : "reset off the line");
      if (reset) anchored = true;
    }
    r.stats.reached = st.n;
  } catch (const OverflowError&) {
    r.stats.reached = st.n;
    if (r.verdict == Verdict::Pass) r.verdict = Verdict::Inconclusive;
  }
  return r;
}

std::vector<GeneratorSpec> prime_claim_grid() {
  std::vector<GeneratorSpec> grid;
  for (Nat n1 = 2; n1 <= 50; ++n1) grid.push_back(validate_spec(make_th1b(n1)));
  for (Nat n1 = 3; n1 <= 50; ++n1) grid.push_back(validate_spec(make_th2b(n1)));
  for (Nat nu : {2, 4, 6, 8})
    for (Nat n1 = 2; n1 <= 30; ++n1)
      for (auto choice : {GapThresholdChoice::Stated, GapThresholdChoice::PaperExample})
        grid.push_back(validate_spec(make_th3(nu, n1, choice)));
  for (Nat nu : {1, 3, 5, 7})
    for (Nat n1 = 2; n1 <= 30; ++n1) grid.push_back(validate_spec(make_th4(nu, n1)));
  return grid;
}

std::vector<GeneratorSpec> prime_floor_grid() {
  std::vector<GeneratorSpec> grid;
  for (Nat m = 3; m <= 7; ++m) {
    Nat pm = nth_prime(m);
    for (Nat nu = 0; nu + 3 <= pm; nu += 2)
      for (Nat n1 = nu + 3; n1 <= nu + 20; ++n1) grid.push_back(validate_spec(make_th5(m, nu, n1)));
  }
  for (Nat m = 2; m <= 7; ++m) {
    Nat pm = nth_prime(m);
    for (Nat nu = 0; nu + 2 <= pm; nu += 2)
      for (Nat n1 = 2 * nu + 4; n1 <= 2 * nu + 20; ++n1)
        grid.push_back(validate_spec(make_th6(m, nu, n1)));
  }
  return grid;
}

std::vector<ClaimReport> run_reports(const std::vector<GeneratorSpec>& specs,
                                     const std::function<ClaimReport(const GeneratorSpec&)>& fn) {
  std::vector<ClaimReport> out(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) out[i] = fn(specs[i]);
  };
  unsigned workers = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                                        static_cast<unsigned>(specs.size()));
  if (workers <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace rowland
