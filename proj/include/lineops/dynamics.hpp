#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "lineops/arrangement.hpp"

namespace lineops {

// One factor of an operator word: Λ_{n,m} or 𝒟_n.
struct OperatorStep {
  enum class Kind { Lambda, DualLines };
  Kind kind = Kind::Lambda;
  MultiplicitySelector nsel;  // Λ: point selector; 𝒟: the only selector
  MultiplicitySelector msel;  // Λ only

  static OperatorStep lambda(MultiplicitySelector n, MultiplicitySelector m);
  static OperatorStep dual_lines(MultiplicitySelector n);
  std::string to_string() const;  // L{>=2;3} / D{2}
};

// A composition of steps.  `steps` is in application order, so the text
// "L{2;3}.D{2}" (D first, as in ∘ notation) stores D{2} then L{2;3}.
struct OperatorSpec {
  std::vector<OperatorStep> steps;

  static OperatorSpec parse(const std::string& text);
  static OperatorSpec lambda(MultiplicitySelector n, MultiplicitySelector m);
  std::string to_string() const;
  Arrangement apply(const Arrangement& L) const;
};

struct Budgets {
  int max_steps = 16;
  std::size_t max_lines = 20000;
  std::size_t profile_lines = 8000;  // no profile above this many lines
  std::size_t max_points = 6000;     // intermediate point sets above this stop the run
};

enum class Verdict { Fixed, Cycle, Extinguished, BudgetLines, BudgetSteps };
const char* verdict_name(Verdict v);

struct TraceStep {
  int index = 0;
  std::size_t lines = 0;
  std::optional<SingularityProfile> profile;
  std::optional<mpq_class> h;
  std::string digest;  // short fingerprint of the canonical text, for display
};

struct SequenceTrace {
  std::string op;
  Budgets budgets;
  std::vector<TraceStep> steps;
  std::vector<Arrangement> arrangements;  // arrangements[i] is L_i
  Verdict verdict = Verdict::BudgetSteps;
  int fixed_at = -1;   // Fixed: L_N = L_{N+1}
  int preperiod = -1;  // Cycle
  int period = -1;     // Cycle
  int length = -1;     // Extinguished: smallest m with L_m empty
  std::string note;    // why a budget stopped the run
  // steps that added a line over the previous arrangement in violation of
  // the growth bound |A| >= n*k; always empty unless the engine is wrong
  std::vector<int> growth_bound_violations;

  std::string verdict_text() const;
};

SequenceTrace run_sequence(const OperatorSpec& op, const Arrangement& L0, const Budgets& budgets = {});

// Exact (preperiod, period) of the orbit over a finite field.  Extinction is
// reported as (length, 1), the empty arrangement being a fixed point.
std::pair<int, int> orbit_over_finite_field(const OperatorSpec& op, const Arrangement& L0);

Arrangement union_of_steps(const SequenceTrace& trace, int i, int j);

std::string trace_table(const SequenceTrace& trace);

// 64-bit FNV-1a of the canonical text, as 16 hex digits.
std::string fingerprint(const std::string& canonical_text);

}  // namespace lineops
