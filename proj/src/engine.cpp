#include "rowland/engine.hpp"

#include <algorithm>

namespace rowland {

namespace {

GeneratorSpec piecewise(Preset preset, int slope, std::int64_t offset, Gate gate, Nat n1,
                        Nat c1, std::int64_t normalize) {
  GeneratorSpec s;
  s.step_rule = StepRule::PiecewiseReset;
  s.slope = slope;
  s.offset = offset;
  s.gate = gate;
  s.n1 = n1;
  s.c1 = c1;
  s.normalize_offset = normalize;
  s.preset = preset;
  return s;
}

}  // namespace

GeneratorSpec make_th1() {
  GeneratorSpec s;
  s.step_rule = StepRule::GcdAdditive;
  s.n1 = 1;
  s.c1 = 7;
  s.preset = Preset::Th1;
  return s;
}

GeneratorSpec make_th2() {
  GeneratorSpec s;
  s.step_rule = StepRule::GcdAdditive;
  s.n1 = 3;
  s.c1 = 6;
  s.preset = Preset::Th2;
  return s;
}

GeneratorSpec make_th1a() { return piecewise(Preset::Th1a, 3, 0, Gate{}, 1, 7, 0); }
GeneratorSpec make_th2a() { return piecewise(Preset::Th2a, 2, 0, Gate{}, 3, 6, 0); }

GeneratorSpec make_th1b(Nat n1) {
  return piecewise(Preset::Th1b, 3, 0, Gate{}, n1, checked_mul(3, n1), 0);
}

GeneratorSpec make_th2b(Nat n1) {
  return piecewise(Preset::Th2b, 2, 0, Gate{}, n1, checked_mul(2, n1), 0);
}

GeneratorSpec make_th3(Nat nu, Nat n1, GapThresholdChoice choice) {
  Gate gate;
  gate.kind = GateKind::GapAtLeast;
  if (choice == GapThresholdChoice::Stated) {
    gate.gap_threshold = nu >= 2 ? (nu - 2) / 2 : 0;
  } else {
    gate.gap_threshold = checked_add(nu, 1);
    gate.waive_until_first_reset = true;
  }
  Nat c1 = checked_add(checked_mul(3, n1), nu);
  return piecewise(Preset::Th3, 3, static_cast<std::int64_t>(nu), gate, n1, c1,
                   -static_cast<std::int64_t>(nu));
}

GeneratorSpec make_th4(Nat nu, Nat n1) {
  Gate gate;
  gate.kind = GateKind::GapAtLeast;
  gate.gap_threshold = checked_add(nu, 1);
  Nat c1 = checked_add(checked_mul(2, n1), nu);
  return piecewise(Preset::Th4, 2, static_cast<std::int64_t>(nu), gate, n1, c1,
                   -static_cast<std::int64_t>(nu));
}

GeneratorSpec make_th5(Nat m, Nat nu, Nat n1) {
  Gate gate;
  gate.kind = GateKind::CoprimePrimorial;
  gate.primorial_index = m;
  Nat c1 = checked_add_signed(checked_mul(3, n1), -static_cast<std::int64_t>(nu));
  return piecewise(Preset::Th5, 3, -static_cast<std::int64_t>(nu), gate, n1, c1,
                   static_cast<std::int64_t>(nu));
}

GeneratorSpec make_th6(Nat m, Nat nu, Nat n1) {
  Gate gate;
  gate.kind = GateKind::CoprimePrimorial;
  gate.primorial_index = m;
  Nat c1 = checked_add_signed(checked_mul(2, n1), -static_cast<std::int64_t>(nu));
  return piecewise(Preset::Th6, 2, -static_cast<std::int64_t>(nu), gate, n1, c1,
                   static_cast<std::int64_t>(nu));
}

GeneratorSpec make_th7() {
  Gate gate;
  gate.kind = GateKind::RecordGcd;
  return piecewise(Preset::Th7, 2, 0, gate, 3, 6, 0);
}

GeneratorSpec make_th7_c7() {
  Gate gate;
  gate.kind = GateKind::RecordGcd;
  return piecewise(Preset::Th7C7, 2, 0, gate, 7, 12, 0);
}

GeneratorSpec make_th7_c5_slope3() {
  Gate gate;
  gate.kind = GateKind::RecordGcd;
  return piecewise(Preset::Th7C5S3, 3, 0, gate, 5, 12, 0);
}

namespace {

void fail(SpecErrorCode code, const std::string& msg) { throw SpecError(code, msg); }

void require_slope(const GeneratorSpec& s, int slope) {
  if (s.slope != slope) fail(SpecErrorCode::SlopeInvalid, "preset requires slope " + std::to_string(slope));
}

void require_gate(const GeneratorSpec& s, GateKind kind) {
  if (s.gate.kind != kind) fail(SpecErrorCode::GateMismatch, "preset requires a different gate");
}

void require_exact_start(const GeneratorSpec& s) {
  Nat expect = checked_add_signed(checked_mul(static_cast<Nat>(s.slope), s.n1), s.offset);
  if (s.c1 != expect)
    fail(SpecErrorCode::C1Mismatch, "c1 = slope*n1 + offset required (expected " + std::to_string(expect) + ")");
}

void require_normalize(const GeneratorSpec& s, std::int64_t expect) {
  if (s.normalize_offset != expect)
    fail(SpecErrorCode::NormalizeMismatch, "normalize_offset must be " + std::to_string(expect));
}

Nat nu_of(const GeneratorSpec& s) {
  return static_cast<Nat>(s.offset < 0 ? -s.offset : s.offset);
}

void validate_fixed_start(const GeneratorSpec& s, Nat n1, Nat c1) {
  if (s.n1 != n1) fail(SpecErrorCode::N1Mismatch, "preset fixes n1 = " + std::to_string(n1));
  if (s.c1 != c1) fail(SpecErrorCode::C1Mismatch, "preset fixes c1 = " + std::to_string(c1));
}

}  // namespace

GeneratorSpec validate_spec(GeneratorSpec s) {
  if (s.n1 < 1) fail(SpecErrorCode::N1TooSmall, "n1 >= 1 required");
  if (s.c1 < 1) fail(SpecErrorCode::C1Invalid, "c1 >= 1 required");
  if (s.step_rule == StepRule::PiecewiseReset && s.slope != 2 && s.slope != 3)
    fail(SpecErrorCode::SlopeInvalid, "slope must be 2 or 3");
  if (s.gate.kind == GateKind::CoprimePrimorial) {
    if (s.gate.primorial_index < 1) fail(SpecErrorCode::MTooSmall, "m >= 1 required");
    try {
      primorial(s.gate.primorial_index);
    } catch (const OverflowError&) {
      fail(SpecErrorCode::MTooLarge, "primorial(m) is not representable");
    }
  }

  switch (s.preset) {
    case Preset::Th1:
      if (s.step_rule != StepRule::GcdAdditive) fail(SpecErrorCode::StepRuleMismatch, "th1 is gcd-additive");
      validate_fixed_start(s, 1, 7);
      break;
    case Preset::Th2:
      if (s.step_rule != StepRule::GcdAdditive) fail(SpecErrorCode::StepRuleMismatch, "th2 is gcd-additive");
      validate_fixed_start(s, 3, 6);
      break;
    case Preset::Th1a:
      require_slope(s, 3);
      require_gate(s, GateKind::Always);
      validate_fixed_start(s, 1, 7);
      s.freeform_warning = true;  // 7 != 3*1: start off the reset line
      break;
    case Preset::Th2a:
      require_slope(s, 2);
      require_gate(s, GateKind::Always);
      validate_fixed_start(s, 3, 6);
      break;
    case Preset::Th1b:
      require_slope(s, 3);
      require_gate(s, GateKind::Always);
      if (s.n1 < 2) fail(SpecErrorCode::N1TooSmall, "n1 >= 2 required");
      require_exact_start(s);
      require_normalize(s, 0);
      break;
    case Preset::Th2b:
      require_slope(s, 2);
      require_gate(s, GateKind::Always);
      if (s.n1 < 3) fail(SpecErrorCode::N1TooSmall, "n1 >= 3 required");
      require_exact_start(s);
      require_normalize(s, 0);
      break;
    case Preset::Th3: {
      require_slope(s, 3);
      require_gate(s, GateKind::GapAtLeast);
      if (s.offset <= 0) fail(SpecErrorCode::NuNotPositive, "nu must be positive");
      if (s.offset % 2 != 0) fail(SpecErrorCode::NuNotEven, "nu must be even");
      if (s.n1 < 2) fail(SpecErrorCode::N1TooSmall, "n1 >= 2 required");
      require_exact_start(s);
      require_normalize(s, -s.offset);
      break;
    }
    case Preset::Th4:
      require_slope(s, 2);
      require_gate(s, GateKind::GapAtLeast);
      if (s.offset <= 0) fail(SpecErrorCode::NuNotPositive, "nu must be positive");
      if (s.n1 < 2) fail(SpecErrorCode::N1TooSmall, "n1 >= 2 required");
      require_exact_start(s);
      require_normalize(s, -s.offset);
      break;
    case Preset::Th5: {
      require_slope(s, 3);
      require_gate(s, GateKind::CoprimePrimorial);
      Nat m = s.gate.primorial_index;
      if (m < 3) fail(SpecErrorCode::MTooSmall, "m >= 3 required");
      if (s.offset > 0) fail(SpecErrorCode::NuNotPositive, "offset must be -nu with nu >= 0");
      Nat nu = nu_of(s);
      if (nu % 2 != 0) fail(SpecErrorCode::NuNotEven, "nu must be even");
      Nat pm = nth_prime(m);
      if (nu + 3 > pm) fail(SpecErrorCode::NuTooLarge, "nu <= p_m - 3 required");
      if (s.n1 <= nu + 2) fail(SpecErrorCode::N1TooSmall, "n1 > nu + 2 required");
      require_exact_start(s);
      require_normalize(s, static_cast<std::int64_t>(nu));
      break;
    }
    case Preset::Th6: {
      require_slope(s, 2);
      require_gate(s, GateKind::CoprimePrimorial);
      Nat m = s.gate.primorial_index;
      if (m < 2) fail(SpecErrorCode::MTooSmall, "m >= 2 required");
      if (s.offset > 0) fail(SpecErrorCode::NuNotPositive, "offset must be -nu with nu >= 0");
      Nat nu = nu_of(s);
      if (nu % 2 != 0) fail(SpecErrorCode::NuNotEven, "nu must be even");
      Nat pm = nth_prime(m);
      if (nu + 2 > pm) fail(SpecErrorCode::NuTooLarge, "nu <= p_m - 2 required");
      if (s.n1 < 2 * nu + 4) fail(SpecErrorCode::N1TooSmall, "n1 >= 2*nu + 4 required");
      require_exact_start(s);
      require_normalize(s, static_cast<std::int64_t>(nu));
      break;
    }
    case Preset::Th7:
      require_slope(s, 2);
      require_gate(s, GateKind::RecordGcd);
      validate_fixed_start(s, 3, 6);
      require_normalize(s, 0);
      break;
    case Preset::Th7C7:
      require_slope(s, 2);
      require_gate(s, GateKind::RecordGcd);
      validate_fixed_start(s, 7, 12);
      require_normalize(s, 0);
      break;
    case Preset::Th7C5S3:
      require_slope(s, 3);
      require_gate(s, GateKind::RecordGcd);
      validate_fixed_start(s, 5, 12);
      require_normalize(s, 0);
      break;
    case Preset::Custom:
      s.freeform_warning = true;
      break;
  }
  return s;
}

std::string preset_name(Preset preset) {
  switch (preset) {
    case Preset::Custom: return "custom";
    case Preset::Th1: return "th1";
    case Preset::Th2: return "th2";
    case Preset::Th1a: return "th1a";
    case Preset::Th2a: return "th2a";
    case Preset::Th1b: return "th1b";
    case Preset::Th2b: return "th2b";
    case Preset::Th3: return "th3";
    case Preset::Th4: return "th4";
    case Preset::Th5: return "th5";
    case Preset::Th6: return "th6";
    case Preset::Th7: return "th7";
    case Preset::Th7C7: return "th7-c7";
    case Preset::Th7C5S3: return "th7-c5s3";
  }
  return "custom";
}

Preset preset_from_name(const std::string& name) {
  for (Preset p : {Preset::Th1, Preset::Th2, Preset::Th1a, Preset::Th2a, Preset::Th1b,
                   Preset::Th2b, Preset::Th3, Preset::Th4, Preset::Th5, Preset::Th6,
                   Preset::Th7, Preset::Th7C7, Preset::Th7C5S3, Preset::Custom})
    if (preset_name(p) == name) return p;
  throw DomainError("unknown preset: " + name);
}

std::string describe(const GeneratorSpec& s) {
  std::string name = preset_name(s.preset);
  switch (s.preset) {
    case Preset::Th1:
    case Preset::Th2:
    case Preset::Th1a:
    case Preset::Th2a:
    case Preset::Th7:
    case Preset::Th7C7:
    case Preset::Th7C5S3:
      return name;
    case Preset::Th1b:
    case Preset::Th2b:
      return name + "(n1=" + std::to_string(s.n1) + ")";
    case Preset::Th3:
      return name + "(nu=" + std::to_string(s.offset) + ",n1=" + std::to_string(s.n1) +
             ",gap=" + std::to_string(s.gate.gap_threshold) +
             (s.gate.waive_until_first_reset ? ",paper-example" : "") + ")";
    case Preset::Th4:
      return name + "(nu=" + std::to_string(s.offset) + ",n1=" + std::to_string(s.n1) + ")";
    case Preset::Th5:
    case Preset::Th6:
      return name + "(m=" + std::to_string(s.gate.primorial_index) +
             ",nu=" + std::to_string(-s.offset) + ",n1=" + std::to_string(s.n1) + ")";
    case Preset::Custom:
      break;
  }
  std::string gate;
  switch (s.gate.kind) {
    case GateKind::Always: gate = "always"; break;
    case GateKind::GapAtLeast: gate = "gap>=" + std::to_string(s.gate.gap_threshold); break;
    case GateKind::CoprimePrimorial: gate = "coprime-primorial(" + std::to_string(s.gate.primorial_index) + ")"; break;
    case GateKind::RecordGcd: gate = "record-gcd"; break;
  }
  if (s.step_rule == StepRule::GcdAdditive)
    return "custom(gcd-additive,n1=" + std::to_string(s.n1) + ",c1=" + std::to_string(s.c1) + ")";
  return "custom(piecewise,slope=" + std::to_string(s.slope) + ",offset=" + std::to_string(s.offset) +
         ",gate=" + gate + ",n1=" + std::to_string(s.n1) + ",c1=" + std::to_string(s.c1) +
         ",normalize=" + std::to_string(s.normalize_offset) + ")";
}

EngineState init_state(const GeneratorSpec& spec) {
  EngineState st;
  st.n = spec.n1;
  st.c = spec.c1;
  st.last_reset = spec.n1;
  st.record_gcd = 1;
  st.reset_seen = false;
  return st;
}

namespace {

bool gate_passes(const EngineState& st, const GeneratorSpec& spec, Nat n, Nat g) {
  switch (spec.gate.kind) {
    case GateKind::Always:
      return true;
    case GateKind::GapAtLeast:
      if (spec.gate.waive_until_first_reset && !st.reset_seen) return true;
      return n - st.last_reset >= spec.gate.gap_threshold;
    case GateKind::CoprimePrimorial:
      return gcd(n, primorial(spec.gate.primorial_index)) == 1;
    case GateKind::RecordGcd:
      return g > st.record_gcd;
  }
  return false;
}

}  // namespace

IncrementEvent step(EngineState& st, const GeneratorSpec& spec) {
  const Nat n = checked_add(st.n, 1);
  const Nat g = gcd(n, st.c);

  bool fired = false;
  Nat c_next = 0;
  if (spec.step_rule == StepRule::GcdAdditive) {
    fired = g > 1;
    c_next = checked_add(st.c, g);
  } else {
    fired = g > 1 && gate_passes(st, spec, n, g);
    c_next = fired ? checked_add_signed(checked_mul(static_cast<Nat>(spec.slope), n), spec.offset)
                   : checked_add(st.c, 1);
  }

  IncrementEvent ev;
  ev.n = n;
  ev.diff = static_cast<std::int64_t>(c_next) - static_cast<std::int64_t>(st.c);
  ev.normalized = ev.diff + spec.normalize_offset;
  ev.gcd_seen = g;
  ev.kind = fired ? IncrementKind::Reset : IncrementKind::Trivial;

  if (spec.gate.kind == GateKind::RecordGcd) st.record_gcd = std::max(st.record_gcd, g);
  if (fired) {
    st.last_reset = n;
    st.reset_seen = true;
  }
  st.n = n;
  st.c = c_next;
  return ev;
}

std::vector<std::pair<Nat, Nat>> generate(const GeneratorSpec& spec, Nat n_max) {
  if (n_max < spec.n1) throw DomainError("n_max >= n1 required");
  std::vector<std::pair<Nat, Nat>> terms;
  terms.reserve(static_cast<std::size_t>(n_max - spec.n1 + 1));
  EngineState st = init_state(spec);
  terms.emplace_back(st.n, st.c);
  while (st.n < n_max) {
    step(st, spec);
    terms.emplace_back(st.n, st.c);
  }
  return terms;
}

std::vector<IncrementEvent> increments(const GeneratorSpec& spec, Nat n_max, bool nontrivial_only) {
  if (n_max < spec.n1) throw DomainError("n_max >= n1 required");
  std::vector<IncrementEvent> events;
  EngineState st = init_state(spec);
  while (st.n < n_max) {
    IncrementEvent ev = step(st, spec);
    if (!nontrivial_only || ev.kind == IncrementKind::Reset) events.push_back(ev);
  }
  return events;
}

}  // namespace rowland
