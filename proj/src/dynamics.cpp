#include "lineops/dynamics.hpp"

#include <cstdio>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace lineops {

OperatorStep OperatorStep::lambda(MultiplicitySelector n, MultiplicitySelector m) {
  OperatorStep s;
  s.kind = Kind::Lambda;
  s.nsel = std::move(n);
  s.msel = std::move(m);
  return s;
}

OperatorStep OperatorStep::dual_lines(MultiplicitySelector n) {
  OperatorStep s;
  s.kind = Kind::DualLines;
  s.nsel = std::move(n);
  s.msel = s.nsel;
  return s;
}

std::string OperatorStep::to_string() const {
  if (kind == Kind::DualLines) return "D{" + nsel.to_string() + "}";
  return "L{" + nsel.to_string() + ";" + msel.to_string() + "}";
}

namespace {

std::string strip(const std::string& s) {
  std::string o;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) o += c;
  return o;
}

OperatorStep parse_step(const std::string& t) {
  if (t.size() < 4 || (t[0] != 'L' && t[0] != 'D') || t[1] != '{' || t.back() != '}')
    throw Error(ErrorKind::Parse, "bad operator factor '" + t + "'");
  std::string body = t.substr(2, t.size() - 3);
  auto semi = body.find(';');
  if (t[0] == 'D') {
    if (semi != std::string::npos) throw Error(ErrorKind::Parse, "D{...} takes one selector: '" + t + "'");
    return OperatorStep::dual_lines(MultiplicitySelector::parse(body));
  }
  if (semi == std::string::npos) {
    // Λ_n = Λ_{n,n}
    auto s = MultiplicitySelector::parse(body);
    return OperatorStep::lambda(s, s);
  }
  return OperatorStep::lambda(MultiplicitySelector::parse(body.substr(0, semi)),
                              MultiplicitySelector::parse(body.substr(semi + 1)));
}

}  // namespace

OperatorSpec OperatorSpec::parse(const std::string& text) {
  std::string t = strip(text);
  // "∘" is three bytes in UTF-8; fold it to '.'
  const std::string ring = "\xE2\x88\x98";
  for (auto p = t.find(ring); p != std::string::npos; p = t.find(ring)) t.replace(p, ring.size(), ".");
  std::vector<std::string> factors;
  std::string cur;
  int depth = 0;
  for (char c : t) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == '.' && depth == 0) {
      factors.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  factors.push_back(cur);
  OperatorSpec op;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (it->empty()) throw Error(ErrorKind::Parse, "empty factor in operator '" + text + "'");
    op.steps.push_back(parse_step(*it));
  }
  return op;
}

OperatorSpec OperatorSpec::lambda(MultiplicitySelector n, MultiplicitySelector m) {
  OperatorSpec op;
  op.steps.push_back(OperatorStep::lambda(std::move(n), std::move(m)));
  return op;
}

std::string OperatorSpec::to_string() const {
  std::string s;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) s += (s.empty() ? "" : ".") + it->to_string();
  return s;
}

Arrangement OperatorSpec::apply(const Arrangement& L) const {
  Arrangement cur = L;
  for (auto& s : steps)
    cur = s.kind == OperatorStep::Kind::Lambda ? lambda_op(s.nsel, s.msel, cur) : dual_lines_op(s.nsel, cur);
  return cur;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Fixed: return "fixed";
    case Verdict::Cycle: return "cycle";
    case Verdict::Extinguished: return "extinguished";
    case Verdict::BudgetLines: return "budget_lines";
    case Verdict::BudgetSteps: return "budget_steps";
  }
  return "?";
}

std::string SequenceTrace::verdict_text() const {
  std::string s = verdict_name(verdict);
  switch (verdict) {
    case Verdict::Fixed: return s + " at step " + std::to_string(fixed_at);
    case Verdict::Cycle:
      return s + " preperiod " + std::to_string(preperiod) + " period " + std::to_string(period);
    case Verdict::Extinguished: return s + " length " + std::to_string(length);
    default: return note.empty() ? s : s + " (" + note + ")";
  }
}

std::string fingerprint(const std::string& canonical_text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

TraceStep record(int index, const Arrangement& L, const Budgets& b) {
  TraceStep st;
  st.index = index;
  st.lines = L.size();
  st.digest = fingerprint(L.canonical_text());
  if (L.size() <= b.profile_lines) {
    st.profile = profile(L);
    if (st.profile->singular_points() > 0) st.h = h_constant(*st.profile);
  }
  return st;
}

// Applies op but gives up (returning nullopt) when an intermediate point set
// would blow the budget.  The pair sweep is quadratic in memory.
std::optional<Arrangement> guarded_apply(const OperatorSpec& op, const Arrangement& L, const Budgets& b,
                                         std::string& why) {
  Arrangement cur = L;
  for (auto& s : op.steps) {
    PointConfig pts = s.kind == OperatorStep::Kind::Lambda ? points_operator(s.nsel, cur) : dualize(cur);
    if (pts.size() > b.max_points) {
      why = std::to_string(pts.size()) + " intermediate points exceed max_points " + std::to_string(b.max_points);
      return std::nullopt;
    }
    cur = lines_operator(s.msel, pts);
  }
  return cur;
}

}  // namespace

SequenceTrace run_sequence(const OperatorSpec& op, const Arrangement& L0, const Budgets& budgets) {
  if (budgets.max_steps <= 0 || budgets.max_lines == 0)
    throw Error(ErrorKind::OutOfRange, "budgets must be positive");
  SequenceTrace tr;
  tr.op = op.to_string();
  tr.budgets = budgets;
  tr.arrangements.push_back(L0);
  tr.steps.push_back(record(0, L0, budgets));
  if (L0.empty()) {
    tr.verdict = Verdict::Extinguished;
    tr.length = 0;
    return tr;
  }
  if (L0.size() > budgets.max_lines) {
    tr.verdict = Verdict::BudgetLines;
    tr.note = "initial arrangement exceeds max_lines";
    return tr;
  }
  std::map<Arrangement, int> seen;
  seen.emplace(L0, 0);

  const bool single_lambda = op.steps.size() == 1 && op.steps[0].kind == OperatorStep::Kind::Lambda;
  for (int s = 1; s <= budgets.max_steps; ++s) {
    const Arrangement& prev = tr.arrangements.back();
    std::string why;
    auto next = guarded_apply(op, prev, budgets, why);
    if (!next) {
      tr.verdict = Verdict::BudgetLines;
      tr.note = why;
      return tr;
    }
    if (single_lambda && !prev.includes(*next)) {
      // Λ_{n,m} ⊆ Λ_{>=min n, >=min m}, so the growth bound applies with the minima
      std::size_t nk = std::size_t(op.steps[0].nsel.min()) * std::size_t(op.steps[0].msel.min());
      if (prev.size() < nk) tr.growth_bound_violations.push_back(s);
    }
    tr.steps.push_back(record(s, *next, budgets));
    tr.arrangements.push_back(*next);
    if (next->empty()) {
      tr.verdict = Verdict::Extinguished;
      tr.length = s;
      return tr;
    }
    if (auto it = seen.find(*next); it != seen.end()) {
      if (it->second == s - 1) {
        tr.verdict = Verdict::Fixed;
        tr.fixed_at = s - 1;
      } else {
        tr.verdict = Verdict::Cycle;
        tr.preperiod = it->second;
        tr.period = s - it->second;
      }
      return tr;
    }
    if (next->size() > budgets.max_lines) {
      tr.verdict = Verdict::BudgetLines;
      tr.note = std::to_string(next->size()) + " lines exceed max_lines " + std::to_string(budgets.max_lines);
      return tr;
    }
    seen.emplace(*next, s);
  }
  tr.verdict = Verdict::BudgetSteps;
  return tr;
}

std::pair<int, int> orbit_over_finite_field(const OperatorSpec& op, const Arrangement& L0) {
  if (!L0.field().is_finite()) throw Error(ErrorKind::NotApplicable, "orbit needs a finite field");
  // at most q^2+q+1 lines, so max_lines never triggers; steps are bounded by
  // the number of subsets but in practice tiny
  Budgets b;
  b.max_steps = 1 << 20;
  b.max_lines = SIZE_MAX;
  b.max_points = SIZE_MAX;
  b.profile_lines = 0;
  auto tr = run_sequence(op, L0, b);
  switch (tr.verdict) {
    case Verdict::Fixed: return {tr.fixed_at, 1};
    case Verdict::Cycle: return {tr.preperiod, tr.period};
    case Verdict::Extinguished: return {tr.length, 1};
    default: throw Error(ErrorKind::OutOfRange, "finite-field orbit did not close");
  }
}

Arrangement union_of_steps(const SequenceTrace& trace, int i, int j) {
  int n = static_cast<int>(trace.arrangements.size());
  if (i < 0 || j < 0 || i >= n || j >= n)
    throw Error(ErrorKind::OutOfRange, "step index out of range (have " + std::to_string(n) + " steps)");
  return set_union(trace.arrangements[i], trace.arrangements[j]);
}

std::string trace_table(const SequenceTrace& trace) {
  std::set<int> ks;
  for (auto& st : trace.steps)
    if (st.profile)
      for (auto& [k, n] : st.profile->t) ks.insert(k);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"step", "|L|", "H", "H~"};
  for (int k : ks) head.push_back("t" + std::to_string(k));
  rows.push_back(head);
  for (auto& st : trace.steps) {
    std::vector<std::string> r = {"L" + std::to_string(st.index), std::to_string(st.lines)};
    if (st.h) {
      r.push_back(st.h->get_str());
      std::ostringstream o;
      o << std::fixed << std::setprecision(4) << st.h->get_d();
      r.push_back(o.str());
    } else {
      r.push_back(st.profile ? "-" : "?");
      r.push_back(st.profile ? "-" : "?");
    }
    for (int k : ks) {
      std::int64_t n = st.profile ? st.profile->t_at(k) : 0;
      r.push_back(n ? std::to_string(n) : "");
    }
    rows.push_back(r);
  }
  std::vector<std::size_t> w(head.size(), 0);
  for (auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) w[c] = std::max(w[c], r[c].size());
  std::ostringstream out;
  out << "operator " << trace.op << "\n";
  for (auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::string cell = r[c];
      // numbers right-aligned, the step label left-aligned
      if (c == 0)
        cell += std::string(w[c] - cell.size(), ' ');
      else
        cell = std::string(w[c] - cell.size(), ' ') + cell;
      line += (c ? "  " : "") + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
  out << "verdict " << trace.verdict_text() << "\n";
  return out.str();
}

}  // namespace lineops
