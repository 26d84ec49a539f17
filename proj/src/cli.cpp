#include "rowland/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rowland/accel.hpp"
#include "rowland/engine.hpp"
#include "rowland/oeis.hpp"
#include "rowland/verify.hpp"

namespace rowland::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// config file: named custom specs in a small INI dialect
//
//   [myspec]
//   rule = piecewise          # or gcd-additive
//   slope = 3
//   offset = 4                # resets assign c = slope*n + offset
//   gate = gap                # always | gap | primorial | record
//   threshold = 1
//   waive-first = false       # gap gate: skip the check until a reset fired
//   m = 7                     # primorial gate index
//   n1 = 6
//   c1 = 22
//   normalize = -4

using ConfigSections = std::map<std::string, std::map<std::string, std::string>>;

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  std::size_t e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

ConfigSections parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file " + path);
  ConfigSections sections;
  std::string line, section;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty()) throw DomainError(path + ":" + std::to_string(line_no) + ": empty section name");
      continue;
    }
    std::size_t eq = t.find('=');
    if (eq == std::string::npos || section.empty())
      throw DomainError(path + ":" + std::to_string(line_no) + ": expected `key = value` inside a section");
    sections[section][trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return sections;
}

GeneratorSpec spec_from_config(const std::map<std::string, std::string>& kv, const std::string& name) {
  GeneratorSpec s;
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };
  auto to_u64 = [&](const std::string& key, const std::string& v) -> Nat {
    try {
      return std::stoull(v);
    } catch (...) {
      throw DomainError("config spec " + name + ": bad integer for " + key);
    }
  };
  auto to_i64 = [&](const std::string& key, const std::string& v) -> std::int64_t {
    try {
      return std::stoll(v);
    } catch (...) {
      throw DomainError("config spec " + name + ": bad integer for " + key);
    }
  };
  if (auto v = get("rule")) {
    if (*v == "gcd-additive") s.step_rule = StepRule::GcdAdditive;
    else if (*v == "piecewise") s.step_rule = StepRule::PiecewiseReset;
    else throw DomainError("config spec " + name + ": rule must be gcd-additive or piecewise");
  }
  if (auto v = get("slope")) s.slope = static_cast<int>(to_i64("slope", *v));
  if (auto v = get("offset")) s.offset = to_i64("offset", *v);
  if (auto v = get("gate")) {
    if (*v == "always") s.gate.kind = GateKind::Always;
    else if (*v == "gap") s.gate.kind = GateKind::GapAtLeast;
    else if (*v == "primorial") s.gate.kind = GateKind::CoprimePrimorial;
    else if (*v == "record") s.gate.kind = GateKind::RecordGcd;
    else throw DomainError("config spec " + name + ": unknown gate " + *v);
  }
  if (auto v = get("threshold")) s.gate.gap_threshold = to_u64("threshold", *v);
  if (auto v = get("waive-first")) s.gate.waive_until_first_reset = (*v == "true" || *v == "1");
  if (auto v = get("m")) s.gate.primorial_index = to_u64("m", *v);
  if (auto v = get("n1")) s.n1 = to_u64("n1", *v);
  if (auto v = get("c1")) s.c1 = to_u64("c1", *v);
  if (auto v = get("normalize")) s.normalize_offset = to_i64("normalize", *v);
  s.preset = Preset::Custom;
  return s;
}

// ---------------------------------------------------------------------------
// preset flags shared by generate / increments / verify / bench / oeis compare

struct SpecFlags {
  std::string preset;
  std::optional<Nat> nu;
  std::optional<Nat> n1;
  std::optional<Nat> m;
  std::optional<Nat> c1;
  std::string gap_threshold;  // "", "paper-example", or a number
  std::string config_file;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& f, bool preset_required = true) {
  auto* opt = cmd->add_option("--preset", f.preset,
                              "builtin preset (th1 th1a th2 th2a th1b th2b th3 th4 th5 th6 th7 "
                              "th7-c7 th7-c5s3) or a [section] from --config");
  if (preset_required) opt->required();
  cmd->add_option("--nu", f.nu, "additive parameter for th3/th4/th5/th6");
  cmd->add_option("--n1", f.n1, "initial index");
  cmd->add_option("--m", f.m, "primorial index for th5/th6");
  cmd->add_option("--c1", f.c1, "initial value override (free-form start)");
  cmd->add_option("--gap-threshold", f.gap_threshold,
                  "th3 gap threshold: a number or `paper-example` (nu+1, waived before the first reset)");
  cmd->add_option("--config", f.config_file, "config file defining named custom specs");
}

Nat require_flag(const std::optional<Nat>& v, const char* flag, const std::string& preset) {
  if (!v) throw DomainError("preset " + preset + " requires " + flag);
  return *v;
}

GeneratorSpec build_spec(const SpecFlags& f, std::ostream& err) {
  GeneratorSpec s;
  bool builtin = true;
  Preset p = Preset::Custom;
  try {
    p = preset_from_name(f.preset);
  } catch (const DomainError&) {
    builtin = false;
  }
  if (!builtin || p == Preset::Custom) {
    if (f.config_file.empty()) throw DomainError("unknown preset: " + f.preset);
    ConfigSections sections = parse_config(f.config_file);
    auto it = sections.find(f.preset);
    if (it == sections.end())
      throw DomainError("config file " + f.config_file + " defines no spec named " + f.preset);
    s = spec_from_config(it->second, f.preset);
    if (f.n1) s.n1 = *f.n1;
    if (f.c1) s.c1 = *f.c1;
    if (!f.gap_threshold.empty() && f.gap_threshold != "paper-example")
      s.gate.gap_threshold = std::stoull(f.gap_threshold);
  } else {
    switch (p) {
      case Preset::Th1: s = make_th1(); break;
      case Preset::Th2: s = make_th2(); break;
      case Preset::Th1a: s = make_th1a(); break;
      case Preset::Th2a: s = make_th2a(); break;
      case Preset::Th1b: s = make_th1b(require_flag(f.n1, "--n1", f.preset)); break;
      case Preset::Th2b: s = make_th2b(require_flag(f.n1, "--n1", f.preset)); break;
      case Preset::Th3: {
        Nat nu = require_flag(f.nu, "--nu", f.preset);
        Nat n1 = require_flag(f.n1, "--n1", f.preset);
        if (f.gap_threshold == "paper-example") {
          s = make_th3(nu, n1, GapThresholdChoice::PaperExample);
        } else {
          s = make_th3(nu, n1, GapThresholdChoice::Stated);
          if (!f.gap_threshold.empty()) s.gate.gap_threshold = std::stoull(f.gap_threshold);
        }
        break;
      }
      case Preset::Th4:
        s = make_th4(require_flag(f.nu, "--nu", f.preset), require_flag(f.n1, "--n1", f.preset));
        if (!f.gap_threshold.empty() && f.gap_threshold != "paper-example")
          s.gate.gap_threshold = std::stoull(f.gap_threshold);
        break;
      case Preset::Th5:
        s = make_th5(require_flag(f.m, "--m", f.preset), require_flag(f.nu, "--nu", f.preset),
                     require_flag(f.n1, "--n1", f.preset));
        break;
      case Preset::Th6:
        s = make_th6(require_flag(f.m, "--m", f.preset), require_flag(f.nu, "--nu", f.preset),
                     require_flag(f.n1, "--n1", f.preset));
        break;
      case Preset::Th7: s = make_th7(); break;
      case Preset::Th7C7: s = make_th7_c7(); break;
      case Preset::Th7C5S3: s = make_th7_c5_slope3(); break;
      case Preset::Custom: break;  // unreachable
    }
    if (f.c1 && *f.c1 != s.c1) {
      s.c1 = *f.c1;  // free-form start: drop the preset claim
      s.preset = Preset::Custom;
    }
  }
  s = validate_spec(s);
  if (s.freeform_warning)
    err << "note: free-form spec " << describe(s) << "; theorem claims are not guaranteed\n";
  return s;
}

// ---------------------------------------------------------------------------
// record output

const char* kind_name(IncrementKind k) { return k == IncrementKind::Reset ? "reset" : "trivial"; }

void write_csv_header(std::ostream& out) { out << "n,value,diff,normalized,gcd_seen,kind\n"; }

void write_record(std::ostream& out, const std::string& format, Nat n, Nat value,
                  const IncrementEvent* ev) {
  if (format == "csv") {
    out << n << ',' << value << ',';
    if (ev) out << ev->diff;
    out << ',';
    if (ev) out << ev->normalized;
    out << ',';
    if (ev) out << ev->gcd_seen;
    out << ',' << (ev ? kind_name(ev->kind) : "initial") << '\n';
    return;
  }
  ordered_json j;
  j["n"] = n;
  j["value"] = value;
  if (ev) {
    j["diff"] = ev->diff;
    j["normalized"] = ev->normalized;
    j["gcd_seen"] = ev->gcd_seen;
    j["kind"] = kind_name(ev->kind);
  } else {
    j["diff"] = nullptr;
    j["normalized"] = nullptr;
    j["gcd_seen"] = nullptr;
    j["kind"] = "initial";
  }
  out << j.dump() << '\n';
}

// ---------------------------------------------------------------------------
// subcommand bodies

int do_generate(const GeneratorSpec& spec, Nat limit, const std::string& format, std::ostream& out) {
  if (limit < 1) throw DomainError("--limit must be >= 1");
  if (format == "csv") write_csv_header(out);
  EngineState st = init_state(spec);
  write_record(out, format, st.n, st.c, nullptr);
  for (Nat emitted = 1; emitted < limit; ++emitted) {
    IncrementEvent ev = step(st, spec);
    write_record(out, format, st.n, st.c, &ev);
  }
  return 0;
}

int do_increments(const GeneratorSpec& spec, Nat limit, bool nontrivial_only, Nat max_n,
                  const std::string& format, std::ostream& out) {
  if (limit < 1) throw DomainError("--limit must be >= 1");
  if (format == "csv") write_csv_header(out);
  EngineState st = init_state(spec);
  Nat emitted = 0;
  while (emitted < limit && st.n < max_n) {
    IncrementEvent ev = step(st, spec);
    if (nontrivial_only && ev.kind != IncrementKind::Reset) continue;
    write_record(out, format, st.n, st.c, &ev);
    ++emitted;
  }
  return 0;
}

int do_accel(int algorithm, Nat n1, Nat count, const std::string& mode, std::ostream& out) {
  auto alg = static_cast<AccelAlgorithm>(algorithm);
  std::vector<Nat> primes;
  if (mode == "recursion") {
    primes = accel_by_recursion(alg, n1, count);
  } else {
    AccelState st = accel_init(alg, n1);
    primes = accel_take(st, count);
  }
  for (Nat p : primes) out << p << '\n';
  if (primes.size() < count)
    throw OverflowError("overflow: stream ends after " + std::to_string(primes.size()) + " terms");
  return 0;
}

int emit_reports(const std::vector<ClaimReport>& reports, std::ostream& out) {
  bool failed = false;
  for (const auto& r : reports) {
    out << to_json(r) << '\n';
    failed = failed || r.verdict == Verdict::Fail;
  }
  return failed ? 1 : 0;
}

int do_bench(const GeneratorSpec& spec, Nat horizon, std::ostream& out) {
  if (spec.preset != Preset::Th1 && spec.preset != Preset::Th1b && spec.preset != Preset::Th2b)
    throw DomainError("bench supports presets th1, th1b, th2b (the accel-backed families)");
  using clock = std::chrono::steady_clock;
  init_sieve();  // pay the one-time table build outside both timings

  auto t0 = clock::now();
  auto events = increments(spec, horizon, /*nontrivial_only=*/true);
  auto t1 = clock::now();

  AccelAlgorithm alg = spec.preset == Preset::Th1   ? AccelAlgorithm::A1
                       : spec.preset == Preset::Th1b ? AccelAlgorithm::A2
                                                     : AccelAlgorithm::A3;
  auto t2 = clock::now();
  AccelState st = accel_init(alg, spec.preset == Preset::Th1 ? 0 : spec.n1);
  auto primes = accel_take(st, events.size());
  auto t3 = clock::now();

  auto ms = [](auto a, auto b) {
    return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(b - a).count();
  };
  double engine_ms = ms(t0, t1), accel_ms = ms(t2, t3);
  out << "bench " << describe(spec) << " horizon " << horizon << "\n";
  out << std::left << std::setw(10) << "method" << std::setw(14) << "nontrivial" << "wall_ms\n";
  out << std::left << std::setw(10) << "engine" << std::setw(14) << events.size() << std::fixed
      << std::setprecision(3) << engine_ms << "\n";
  out << std::left << std::setw(10) << "accel" << std::setw(14) << primes.size() << std::fixed
      << std::setprecision(3) << accel_ms << "\n";
  if (accel_ms > 0)
    out << "speedup   " << std::fixed << std::setprecision(1) << engine_ms / accel_ms << "x\n";
  return 0;
}

std::vector<std::int64_t> preset_stream(const GeneratorSpec& spec, Nat count, bool increments_stream,
                                        Nat max_n) {
  std::vector<std::int64_t> values;
  values.reserve(count);
  EngineState st = init_state(spec);
  if (!increments_stream) values.push_back(static_cast<std::int64_t>(st.c));
  while (values.size() < count && st.n < max_n) {
    IncrementEvent ev = step(st, spec);
    if (increments_stream) {
      if (ev.kind == IncrementKind::Reset) values.push_back(ev.normalized);
    } else {
      values.push_back(static_cast<std::int64_t>(st.c));
    }
  }
  return values;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gcd-driven prime-generating recurrences: generation, acceleration, verification"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit terms (n, c(n)) of a recurrence");
  SpecFlags gen_flags;
  Nat gen_limit = 0;
  std::string gen_format = "jsonl";
  add_spec_flags(gen, gen_flags);
  gen->add_option("--limit", gen_limit, "number of terms to emit")->required();
  gen->add_option("--format", gen_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));

  // increments
  auto* inc = app.add_subcommand("increments", "emit per-step increment events");
  SpecFlags inc_flags;
  Nat inc_limit = 0, inc_max_n = 10'000'000;
  std::string inc_format = "jsonl";
  bool inc_nontrivial = false;
  add_spec_flags(inc, inc_flags);
  inc->add_option("--limit", inc_limit, "number of events to emit")->required();
  inc->add_option("--format", inc_format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}));
  inc->add_flag("--nontrivial-only", inc_nontrivial, "emit reset events only");
  inc->add_option("--max-n", inc_max_n, "index safety cap (default 1e7)");

  // accel
  auto* acc = app.add_subcommand("accel", "emit nontrivial increments directly");
  int acc_algorithm = 0;
  Nat acc_n1 = 0, acc_count = 0;
  std::string acc_mode = "iterate";
  acc->add_option("--algorithm", acc_algorithm, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  acc->add_option("--n1", acc_n1, "initial index (algorithms 2 and 3)");
  acc->add_option("--count", acc_count, "number of primes to emit")->required();
  acc->add_option("--mode", acc_mode, "iterate or recursion")
      ->check(CLI::IsMember({"iterate", "recursion"}));

  // verify
  auto* ver = app.add_subcommand("verify", "run a claim-checking suite");
  SpecFlags ver_flags;
  std::string ver_suite, ver_report = "jsonl";
  Nat ver_horizon = 100'000, ver_resets = 12, ver_max_n = 0;
  int ver_base_k = 0, ver_algorithm = 0, ver_slope = 0;
  ver->add_option("--suite", ver_suite, "prime-claim equivalence accel-vs-engine prime-floor theorem7 lemma1")
      ->required()
      ->check(CLI::IsMember({"prime-claim", "equivalence", "accel-vs-engine", "prime-floor",
                             "theorem7", "lemma1"}));
  add_spec_flags(ver, ver_flags, /*preset_required=*/false);
  ver->add_option("--horizon", ver_horizon, "index horizon (default 1e5; lemma1: n_max, default 2000)");
  ver->add_option("--resets", ver_resets, "reset count for theorem7/accel-vs-engine");
  ver->add_option("--base-k", ver_base_k, "theorem7: first exponent of the 2^k+1 comparison (0 or 1)")
      ->check(CLI::Range(0, 1));
  ver->add_option("--algorithm", ver_algorithm, "accel-vs-engine: 1, 2 or 3")->check(CLI::Range(1, 3));
  ver->add_option("--slope", ver_slope, "equivalence: 2 or 3")->check(CLI::Range(2, 3));
  ver->add_option("--max-n", ver_max_n, "accel-vs-engine: only resets with index <= max-n");
  ver->add_option("--report", ver_report, "report format (jsonl)")->check(CLI::IsMember({"jsonl"}));

  // bench
  auto* ben = app.add_subcommand("bench", "wall-time of direct generation vs accel");
  SpecFlags ben_flags;
  Nat ben_horizon = 1'000'000;
  add_spec_flags(ben, ben_flags);
  ben->add_option("--horizon", ben_horizon, "engine index horizon");

  // oeis
  auto* oe = app.add_subcommand("oeis", "fetch and compare reference b-files");
  oe->require_subcommand(1);
  std::string oe_cache_dir;

  auto* oef = oe->add_subcommand("fetch", "print the b-file for an identifier (cache-first)");
  std::string oef_id;
  bool oef_offline = false;
  oef->add_option("id", oef_id, "OEIS identifier, e.g. A137613")->required();
  oef->add_flag("--offline", oef_offline, "never touch the network; require a cache hit");
  oef->add_option("--cache-dir", oe_cache_dir, "cache directory (default $ROWLAND_OEIS_CACHE or ./oeis-cache)");

  auto* oec = oe->add_subcommand("compare", "compare generated values against a b-file");
  SpecFlags oec_flags;
  std::string oec_id;
  Nat oec_count = 0, oec_max_n = 10'000'000;
  bool oec_offline = false, oec_increments = false;
  int oec_algorithm = 0;
  Nat oec_accel_n1 = 0;
  oec->add_option("id", oec_id, "OEIS identifier")->required();
  add_spec_flags(oec, oec_flags, /*preset_required=*/false);
  oec->add_option("--count", oec_count, "number of values to compare")->required();
  oec->add_flag("--increments", oec_increments, "compare nontrivial normalized increments instead of terms");
  oec->add_option("--algorithm", oec_algorithm, "compare an accel stream (1, 2 or 3)")->check(CLI::Range(1, 3));
  oec->add_option("--accel-n1", oec_accel_n1, "n1 for accel algorithms 2 and 3");
  oec->add_flag("--offline", oec_offline, "never touch the network; require a cache hit");
  oec->add_option("--cache-dir", oe_cache_dir, "cache directory");
  oec->add_option("--max-n", oec_max_n, "index safety cap for increment streams");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("rowland");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return do_generate(build_spec(gen_flags, err), gen_limit, gen_format, out);
    if (inc->parsed())
      return do_increments(build_spec(inc_flags, err), inc_limit, inc_nontrivial, inc_max_n,
                           inc_format, out);
    if (acc->parsed()) return do_accel(acc_algorithm, acc_n1, acc_count, acc_mode, out);

    if (ver->parsed()) {
      std::vector<ClaimReport> reports;
      if (ver_suite == "prime-claim") {
        if (!ver_flags.preset.empty()) {
          reports.push_back(check_prime_claim(build_spec(ver_flags, err), ver_horizon));
        } else {
          reports = run_reports(prime_claim_grid(), [&](const GeneratorSpec& s) {
            return check_prime_claim(s, ver_horizon);
          });
        }
      } else if (ver_suite == "equivalence") {
        bool single = ver_flags.n1 || ver_flags.c1 || ver_slope != 0;
        if (single) {
          Nat n1 = ver_flags.n1.value_or(1);
          Nat c1 = ver_flags.c1.value_or(7);
          int slope = ver_slope != 0 ? ver_slope : 3;
          reports.push_back(check_equivalence_gcd_piecewise(n1, c1, slope, ver_horizon));
        } else {
          reports.push_back(check_equivalence_gcd_piecewise(1, 7, 3, ver_horizon));
          reports.push_back(check_equivalence_gcd_piecewise(3, 6, 2, ver_horizon));
        }
      } else if (ver_suite == "accel-vs-engine") {
        if (ver_algorithm == 0) throw DomainError("--algorithm is required for accel-vs-engine");
        reports.push_back(check_accel_vs_engine(static_cast<AccelAlgorithm>(ver_algorithm),
                                                ver_flags.n1.value_or(0), ver_resets, ver_max_n));
      } else if (ver_suite == "prime-floor") {
        if (!ver_flags.preset.empty()) {
          reports.push_back(check_prime_floor(build_spec(ver_flags, err), ver_horizon));
        } else {
          reports = run_reports(prime_floor_grid(), [&](const GeneratorSpec& s) {
            return check_prime_floor(s, ver_horizon);
          });
        }
      } else if (ver_suite == "theorem7") {
        GeneratorSpec spec = ver_flags.preset.empty() ? validate_spec(make_th7())
                                                      : build_spec(ver_flags, err);
        Nat resets = ver_resets;
        if (ver->count("--horizon") > 0 && ver->count("--resets") == 0) {
          resets = 0;  // take every reset that fits under the index horizon
          for (const auto& ev : increments(spec, ver_horizon, true)) {
            (void)ev;
            ++resets;
          }
        }
        reports.push_back(check_theorem7(spec, resets, ver_base_k));
      } else if (ver_suite == "lemma1") {
        Nat n_max = ver_horizon == 100'000 ? 2000 : ver_horizon;
        reports.push_back(scan_lemma1(n_max));
      }
      return emit_reports(reports, out);
    }

    if (ben->parsed()) return do_bench(build_spec(ben_flags, err), ben_horizon, out);

    if (oef->parsed()) {
      oeis::FetchOptions opt;
      opt.cache_dir = oe_cache_dir;
      opt.offline = oef_offline;
      out << oeis::fetch_bfile(oef_id, opt);
      return 0;
    }
    if (oec->parsed()) {
      oeis::FetchOptions opt;
      opt.cache_dir = oe_cache_dir;
      opt.offline = oec_offline;
      oeis::BFile ref = oeis::parse_bfile(oeis::fetch_bfile(oec_id, opt), oec_id);
      std::vector<std::int64_t> values;
      if (oec_algorithm != 0) {
        AccelState st = accel_init(static_cast<AccelAlgorithm>(oec_algorithm), oec_accel_n1);
        for (Nat p : accel_take(st, oec_count)) values.push_back(static_cast<std::int64_t>(p));
      } else if (!oec_flags.preset.empty()) {
        values = preset_stream(build_spec(oec_flags, err), oec_count, oec_increments, oec_max_n);
      } else {
        throw DomainError("oeis compare needs --preset or --algorithm");
      }
      out << oeis::to_json(oeis::compare_sequences(values, ref), oec_id) << '\n';
      return 0;
    }
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SpecError& e) {
    err << "error: invalid spec: " << e.what() << "\n";
    return 2;
  } catch (const oeis::FetchError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const oeis::ParseError& e) {
    err << "error: b-file parse: " << e.what() << "\n";
    return 2;
  } catch (const oeis::StructureError& e) {
    err << "error: b-file structure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace rowland::cli
