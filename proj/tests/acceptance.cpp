// Acceptance suite: one checked criterion per numbered block, one PASS/FAIL
// line each, exit 1 when anything failed. `--criterion N` runs a single one.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "rowland/accel.hpp"
#include "rowland/engine.hpp"
#include "rowland/oeis.hpp"
#include "rowland/verify.hpp"

using namespace rowland;
namespace fs = std::filesystem;

namespace {

using Problems = std::vector<std::string>;

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

const fs::path kFixtures{ROWLAND_FIXTURE_DIR};

std::vector<Nat> term_values(const GeneratorSpec& spec, Nat n_max) {
  std::vector<Nat> v;
  for (auto& [n, c] : generate(spec, n_max)) v.push_back(c);
  return v;
}

void expect_pass(Problems& p, const ClaimReport& r) {
  if (r.verdict == Verdict::Pass) return;
  std::string msg = r.claim_id + ": " + to_string(r.verdict);
  if (!r.counterexamples.empty())
    msg += " [n=" + std::to_string(r.counterexamples[0].n) + ": " + r.counterexamples[0].detail + "]";
  p.push_back(msg);
}

// --- criterion 1 -----------------------------------------------------------

void criterion1(Problems& p) {
  AccelState first = accel_init(AccelAlgorithm::A1);
  auto opening = accel_take(first, 5);
  if (opening != std::vector<Nat>{5, 3, 11, 3, 23})
    p.push_back("opening stream is " + join(opening));

  AccelState st = accel_init(AccelAlgorithm::A1);
  auto iterated = accel_take(st, 10'000);
  auto recursed = accel_by_recursion(AccelAlgorithm::A1, 0, 10'000);
  if (iterated != recursed)
    p.push_back("iteration and recursion disagree (lengths " + std::to_string(iterated.size()) +
                " vs " + std::to_string(recursed.size()) + ")");
  if (iterated.size() < 10'000 && !st.exhausted)
    p.push_back("stream ended early without signalling overflow termination");
  for (Nat prime : iterated)
    if (!is_prime(prime)) {
      p.push_back("emitted value " + std::to_string(prime) + " is not prime");
      break;
    }
}

// --- criterion 2 -----------------------------------------------------------

void criterion2(Problems& p) {
  AccelState a2 = accel_init(AccelAlgorithm::A2, 4);
  std::vector<Nat> emitted, n_walk;
  for (int i = 0; i < 4; ++i) {
    emitted.push_back(accel_next(a2).value_or(0));
    n_walk.push_back(a2.N);
  }
  if (emitted != std::vector<Nat>{7, 13, 5, 29})
    p.push_back("slope-3 family from n1=4 emitted " + join(emitted));
  if (n_walk != std::vector<Nat>{6, 12, 24, 28})
    p.push_back("slope-3 family N walk-through is " + join(n_walk));

  AccelState a3 = accel_init(AccelAlgorithm::A3, 5);
  emitted.clear();
  n_walk.clear();
  for (int i = 0; i < 4; ++i) {
    emitted.push_back(accel_next(a3).value_or(0));
    n_walk.push_back(a3.N);
  }
  if (emitted != std::vector<Nat>{2, 5, 3, 11})
    p.push_back("slope-2 family from n1=5 emitted " + join(emitted));
  if (n_walk != std::vector<Nat>{3, 4, 8, 10})
    p.push_back("slope-2 family N walk-through is " + join(n_walk));
}

// --- criterion 3 -----------------------------------------------------------

void criterion3(Problems& p) {
  expect_pass(p, check_accel_vs_engine(AccelAlgorithm::A1, 0, kNatMax, 1'000'000));
  for (Nat n1 = 2; n1 <= 20; ++n1)
    expect_pass(p, check_accel_vs_engine(AccelAlgorithm::A2, n1, kNatMax, 1'000'000));
  for (Nat n1 = 3; n1 <= 20; ++n1)
    expect_pass(p, check_accel_vs_engine(AccelAlgorithm::A3, n1, kNatMax, 1'000'000));
}

// --- criterion 4 -----------------------------------------------------------

void criterion4(Problems& p) {
  expect_pass(p, check_equivalence_gcd_piecewise(1, 7, 3, 100'000));
  expect_pass(p, check_equivalence_gcd_piecewise(3, 6, 2, 100'000));
}

// --- criterion 5 -----------------------------------------------------------

void criterion5(Problems& p) {
  auto grid = prime_claim_grid();
  auto reports = run_reports(grid, [](const GeneratorSpec& s) { return check_prime_claim(s, 100'000); });
  std::size_t failed = 0;
  for (const auto& r : reports)
    if (r.verdict != Verdict::Pass) {
      ++failed;
      if (failed <= 6) expect_pass(p, r);
    }
  if (failed > 6) p.push_back("... " + std::to_string(failed) + " grid specs failed in total");
}

// --- criterion 6 -----------------------------------------------------------

void criterion6(Problems& p) {
  auto grid = prime_floor_grid();
  auto reports = run_reports(grid, [](const GeneratorSpec& s) { return check_prime_floor(s, 100'000); });
  std::size_t failed = 0;
  for (const auto& r : reports)
    if (r.verdict != Verdict::Pass) {
      ++failed;
      if (failed <= 6) expect_pass(p, r);
    }
  if (failed > 6) p.push_back("... " + std::to_string(failed) + " grid specs failed in total");

  GeneratorSpec instance = validate_spec(make_th5(7, 14, 17));
  auto opening = term_values(instance, 26);
  if (opening != std::vector<Nat>{37, 38, 43, 44, 45, 46, 55, 56, 57, 58})
    p.push_back("quoted instance terms are " + join(opening));
  auto events = increments(instance, 100, true);
  if (events.size() < 2 || events[0].normalized != 19 || events[1].normalized != 23)
    p.push_back("quoted instance enlarged increments do not open with 19,23");
}

// --- criterion 7 -----------------------------------------------------------

void criterion7(Problems& p) {
  GeneratorSpec spec = validate_spec(make_th7());
  EngineState st = init_state(spec);
  std::vector<std::int64_t> diffs;
  std::vector<Nat> indices;
  while (diffs.size() < 12) {
    IncrementEvent ev = step(st, spec);
    if (ev.kind != IncrementKind::Reset) continue;
    diffs.push_back(ev.diff);
    indices.push_back(ev.n);
  }
  for (std::size_t j = 0; j < 12; ++j) {
    std::int64_t expected = static_cast<std::int64_t>(Nat{1} << j) + 1;  // j=0 gives the opening 2
    if (diffs[j] != expected)
      p.push_back("reset diff #" + std::to_string(j + 1) + " is " + std::to_string(diffs[j]) +
                  ", expected " + std::to_string(expected));
    if (indices[j] != static_cast<Nat>(2 * expected))
      p.push_back("reset #" + std::to_string(j + 1) + " at n=" + std::to_string(indices[j]) +
                  ", expected " + std::to_string(2 * expected));
  }

  // Independent brute-force simulation (record recomputed by full rescan).
  auto naive = oracle::record_gcd_terms(2, 3, 6, indices.back());
  auto engine_terms = term_values(spec, indices.back());
  if (naive != engine_terms) p.push_back("engine terms disagree with the brute-force oracle");

  auto diffs_of = [](const GeneratorSpec& s, std::size_t count) {
    std::vector<std::int64_t> out;
    EngineState state = init_state(s);
    while (out.size() < count) {
      IncrementEvent ev = step(state, s);
      if (ev.kind == IncrementKind::Reset) out.push_back(ev.diff);
    }
    return out;
  };
  auto c7 = diffs_of(validate_spec(make_th7_c7()), 4);
  if (c7 != std::vector<std::int64_t>{4, 7, 13, 25}) p.push_back("c(7)=12 variant opens " + join(c7));
  auto c5 = diffs_of(validate_spec(make_th7_c5_slope3()), 4);
  if (c5 != std::vector<std::int64_t>{6, 11, 21, 41})
    p.push_back("c(5)=12 slope-3 variant opens " + join(c5));
}

// --- criterion 8 -----------------------------------------------------------

void criterion8(Problems& p) {
  ClaimReport r = scan_lemma1(2000);
  expect_pass(p, r);
  if (r.stats.recorded_total == 0) p.push_back("no bound violations recorded; the scan is vacuous");
}

// --- criterion 9 -----------------------------------------------------------

void criterion9(Problems& p) {
  const std::vector<Nat> quoted{22, 23, 24, 31, 32, 33, 34, 35, 46};

  GeneratorSpec paper = validate_spec(make_th3(4, 6, GapThresholdChoice::PaperExample));
  auto reproduced = term_values(paper, 14);
  if (reproduced != quoted)
    p.push_back("paper-example threshold yields " + join(reproduced));

  GeneratorSpec stated = validate_spec(make_th3(4, 6, GapThresholdChoice::Stated));
  auto run = term_values(stated, 14);
  Nat divergence = 0;
  for (std::size_t i = 0; i < quoted.size(); ++i)
    if (run[i] != quoted[i]) {
      divergence = 6 + i;
      break;
    }
  if (divergence != 12)
    p.push_back("stated threshold diverges at n=" + std::to_string(divergence) + ", expected n=12");

  expect_pass(p, check_prime_claim(paper, 100'000));
  expect_pass(p, check_prime_claim(stated, 100'000));
}

// --- criterion 10 ----------------------------------------------------------

void criterion10(Problems& p) {
  for (const char* name : {"A137613.txt", "A168143.txt", "A168144.txt"}) {
    std::string text = slurp(kFixtures / name);
    if (text.empty()) {
      p.push_back(std::string("fixture ") + name + " missing");
      continue;
    }
    oeis::BFile parsed = oeis::parse_bfile(text);
    if (oeis::render_bfile(parsed) != text)
      p.push_back(std::string("fixture ") + name + " does not round-trip");
  }

  oeis::BFile classic = oeis::parse_bfile(slurp(kFixtures / "A137613.txt"));
  AccelState st = accel_init(AccelAlgorithm::A1);
  std::vector<std::int64_t> generated;
  for (Nat prime : accel_take(st, classic.entries.size()))
    generated.push_back(static_cast<std::int64_t>(prime));
  oeis::CompareReport classic_report = oeis::compare_sequences(generated, classic);
  if (classic_report.prefix_len != classic.entries.size() || classic_report.divergence)
    p.push_back("classic fixture does not fully match the accel stream (prefix " +
                std::to_string(classic_report.prefix_len) + ")");

  // The two recorded reference lists disagree with simulation; the reports
  // must pinpoint the first difference rather than assert a match.
  GeneratorSpec th5 = validate_spec(make_th5(7, 14, 17));
  oeis::BFile inc_ref = oeis::parse_bfile(slurp(kFixtures / "A168143.txt"));
  std::vector<std::int64_t> inc;
  for (const auto& ev : increments(th5, 200, true)) inc.push_back(ev.normalized);
  inc.resize(std::min<std::size_t>(inc.size(), inc_ref.entries.size()));
  oeis::CompareReport inc_report = oeis::compare_sequences(inc, inc_ref);
  if (!inc_report.divergence || inc_report.divergence->position != 2 ||
      inc_report.divergence->generated != 31 || inc_report.divergence->reference != 29)
    p.push_back("increment comparison report: " + oeis::to_json(inc_report, "A168143"));

  oeis::BFile term_ref = oeis::parse_bfile(slurp(kFixtures / "A168144.txt"));
  auto terms = term_values(th5, 17 + term_ref.entries.size() - 1);
  std::vector<std::int64_t> terms_i64(terms.begin(), terms.end());
  oeis::CompareReport term_report = oeis::compare_sequences(terms_i64, term_ref);
  if (!term_report.divergence || term_report.divergence->position != 10 ||
      term_report.divergence->generated != 59 || term_report.divergence->reference != 73)
    p.push_back("term comparison report: " + oeis::to_json(term_report, "A168144"));
}

// --- criterion 11 ----------------------------------------------------------

void criterion11(Problems& p) {
  std::size_t failed = 0;
  auto run_bound = [&](const GeneratorSpec& spec, Nat horizon) {
    ClaimReport r = check_slope_bound(spec, horizon);
    if (r.verdict != Verdict::Pass) {
      ++failed;
      if (failed <= 6) expect_pass(p, r);
    }
  };
  for (const auto& spec : prime_claim_grid())
    if (spec.step_rule == StepRule::PiecewiseReset) run_bound(spec, 100'000);
  for (const auto& spec : prime_floor_grid()) run_bound(spec, 100'000);
  run_bound(validate_spec(make_th7()), 4100);
  run_bound(validate_spec(make_th7_c7()), 4100);
  run_bound(validate_spec(make_th7_c5_slope3()), 4100);
  if (failed > 6) p.push_back("... " + std::to_string(failed) + " runs failed in total");
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0: none stated
  std::function<void(Problems&)> body;
};

const std::vector<Criterion> kCriteria = {
    {1, "algorithm-1 exactness, iteration/recursion agreement, primality", 5.0, criterion1},
    {2, "algorithm-2/3 worked examples with N walk-throughs", 0.0, criterion2},
    {3, "engine/accel nontrivial-increment equivalence to n=1e6", 10.0, criterion3},
    {4, "gcd-additive/piecewise equivalence to n=1e5 from both classic starts", 0.0, criterion4},
    {5, "prime-claim grid, zero counterexamples", 60.0, criterion5},
    {6, "prime-floor grid plus the quoted instance", 0.0, criterion6},
    {7, "record-gcd preset: 2^k+1 diffs at indices 2^k+2, plus variants", 1.0, criterion7},
    {8, "gcd identity scan with classified bound violations", 30.0, criterion8},
    {9, "gap-threshold discrepancy: reproduction and pinpointed divergence", 0.0, criterion9},
    {10, "reference b-file round-trips and comparison reports", 0.0, criterion10},
    {11, "slope bound with equality exactly at reset indices", 0.0, criterion11},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

  bool all_passed = true;
  for (const auto& criterion : kCriteria) {
    if (only != 0 && criterion.id != only) continue;
    Problems problems;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criterion.body(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds)
      problems.push_back("runtime " + std::to_string(seconds) + "s exceeds the " +
                         std::to_string(criterion.budget_seconds) + "s budget");

    bool passed = problems.empty();
    all_passed = all_passed && passed;
    std::printf("criterion %2d: %s  (%6.2fs)  %s\n", criterion.id, passed ? "PASS" : "FAIL", seconds,
                criterion.title);
    for (const auto& problem : problems) std::printf("    - %s\n", problem.c_str());
  }
  return all_passed ? 0 : 1;
}
