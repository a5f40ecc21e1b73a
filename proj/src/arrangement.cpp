#include "lineops/arrangement.hpp"

#include <numeric>
#include <set>
#include <sstream>

namespace lineops {

MadeArrangement make_arrangement(const std::vector<Triple>& normals, const Field& f) {
  std::vector<ProjLine> lines;
  lines.reserve(normals.size());
  for (auto& t : normals) {
    for (auto& s : t)
      if (s.field() != f) throw Error(ErrorKind::FieldMismatch, "coefficient not in " + f.to_string());
    lines.emplace_back(t);
  }
  std::size_t before = lines.size();
  Arrangement a(f, std::move(lines));
  return {a, before - a.size()};
}

PointConfig make_point_config(const std::vector<Triple>& coords, const Field& f) {
  std::vector<ProjPoint> pts;
  for (auto& t : coords) {
    for (auto& s : t)
      if (s.field() != f) throw Error(ErrorKind::FieldMismatch, "coordinate not in " + f.to_string());
    pts.emplace_back(t);
  }
  return PointConfig(f, std::move(pts));
}

Arrangement dualize(const PointConfig& p) {
  std::vector<ProjLine> v;
  v.reserve(p.size());
  for (auto& x : p) v.push_back(dualize(x));
  return Arrangement(p.field(), std::move(v));
}

PointConfig dualize(const Arrangement& l) {
  std::vector<ProjPoint> v;
  v.reserve(l.size());
  for (auto& x : l) v.push_back(dualize(x));
  return PointConfig(l.field(), std::move(v));
}

// ---- selectors

MultiplicitySelector MultiplicitySelector::at_least_n(int n) {
  MultiplicitySelector s;
  s.at_least = n;
  s.validate();
  return s;
}

MultiplicitySelector MultiplicitySelector::exactly(std::vector<int> ks) {
  MultiplicitySelector s;
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  s.exact = std::move(ks);
  s.validate();
  return s;
}

void MultiplicitySelector::validate() const {
  if (exact.empty() && !at_least) throw Error(ErrorKind::Parse, "empty multiplicity selector");
  for (int k : exact)
    if (k < 2) throw Error(ErrorKind::Parse, "selector members must be >= 2");
  if (at_least && *at_least < 2) throw Error(ErrorKind::Parse, "selector bound must be >= 2");
}

MultiplicitySelector MultiplicitySelector::parse(const std::string& text) {
  MultiplicitySelector s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::string t;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw Error(ErrorKind::Parse, "empty selector item in '" + text + "'");
    bool ge = t.rfind(">=", 0) == 0;
    std::string num = ge ? t.substr(2) : t;
    if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 6)
      throw Error(ErrorKind::Parse, "bad selector item '" + t + "'");
    int v = std::stoi(num);
    if (ge)
      s.at_least = s.at_least ? std::min(*s.at_least, v) : v;
    else
      s.exact.push_back(v);
  }
  std::sort(s.exact.begin(), s.exact.end());
  s.exact.erase(std::unique(s.exact.begin(), s.exact.end()), s.exact.end());
  s.validate();
  return s;
}

int MultiplicitySelector::min() const {
  int m = at_least ? *at_least : INT32_MAX;
  if (!exact.empty()) m = std::min(m, exact.front());
  return m;
}

bool MultiplicitySelector::subset_of(const MultiplicitySelector& o) const {
  for (int k : exact)
    if (!o.contains(k)) return false;
  if (at_least) {
    if (!o.at_least) return false;
    // k >= a must all be accepted by o
    for (int k = *at_least; k < *o.at_least; ++k)
      if (!o.contains(k)) return false;
  }
  return true;
}

std::string MultiplicitySelector::to_string() const {
  std::string s;
  for (int k : exact) s += (s.empty() ? "" : ",") + std::to_string(k);
  if (at_least) s += (s.empty() ? ">=" : ",>=") + std::to_string(*at_least);
  return s;
}

// ---- profiles

std::int64_t SingularityProfile::singular_points() const {
  std::int64_t s = 0;
  for (auto& [k, n] : t) s += n;
  return s;
}

bool SingularityProfile::consistent() const {
  if (d < 2) return t.empty();
  std::int64_t pairs = 0;
  for (auto& [k, n] : t) pairs += std::int64_t(k) * (k - 1) / 2 * n;
  return pairs == d * (d - 1) / 2;
}

std::string SingularityProfile::to_string() const {
  std::string s;
  for (auto& [k, n] : t) s += (s.empty() ? "" : " ") + ("t" + std::to_string(k) + "=" + std::to_string(n));
  return s.empty() ? "none" : s;
}

SingularityProfile profile_from_map(std::int64_t d, std::map<int, std::int64_t> t) {
  SingularityProfile p;
  p.d = d;
  for (auto& [k, n] : t)
    if (n != 0) p.t[k] = n;
  return p;
}

mpq_class h_constant(const SingularityProfile& pr) {
  mpz_class num = mpz_class(pr.d) * pr.d, den = 0;
  for (auto& [m, n] : pr.t) {
    num -= mpz_class(m) * m * n;
    den += n;
  }
  if (den == 0) throw Error(ErrorKind::NotApplicable, "H-constant undefined: no singular points");
  mpq_class h(num, den);
  h.canonicalize();
  return h;
}

InequalityReport inequality_report(const SingularityProfile& pr, bool trivial, bool quasi_trivial, bool real_flag,
                                   std::uint32_t characteristic) {
  InequalityReport r;
  const std::int64_t d = pr.d;
  std::int64_t t = pr.singular_points();

  auto& h = r.hirzebruch;
  h.applicable = !trivial && !quasi_trivial && d >= 3;
  h.informational = characteristic > 0;
  h.value = pr.t_at(2) + pr.t_at(3) - d;
  for (auto& [k, n] : pr.t)
    if (k >= 5) h.value -= (k - 4) * n;
  if (!h.applicable) h.note = "arrangement is trivial or quasi-trivial";
  else if (h.informational) h.note = "positive characteristic: informational only";

  auto& m = r.melchior;
  m.applicable = real_flag && d >= 3 && !trivial;
  m.informational = characteristic > 0;
  m.value = pr.t_at(2) - 3;
  for (auto& [k, n] : pr.t)
    if (k >= 3) m.value -= (k - 3) * n;
  if (!real_flag) m.note = "not declared real";
  else if (!m.applicable) m.note = "fewer than 3 lines or a pencil";

  auto& s = r.simpliciality;
  s.applicable = d >= 3 && !trivial;
  s.value = 3;
  for (auto& [k, n] : pr.t) s.value += (k - 3) * n;
  if (!s.applicable) s.note = "fewer than 3 lines or a pencil";

  auto& b = r.de_bruijn_erdos;
  b.applicable = d >= 3 && !trivial;
  b.value = t - d;
  if (!b.applicable) b.note = "fewer than 3 lines or a pencil";
  return r;
}

namespace {
bool is_trivial(const SingularityProfile& pr) { return pr.d <= 2 || pr.t_at(static_cast<int>(pr.d)) == 1; }
bool is_quasi_trivial(const SingularityProfile& pr) {
  return pr.d >= 3 && !is_trivial(pr) && pr.t_at(static_cast<int>(pr.d - 1)) >= 1;
}
}  // namespace

InequalityReport inequality_report(const Arrangement& L, bool real_flag) {
  auto pr = profile(L);
  return inequality_report(pr, is_trivial(pr), is_quasi_trivial(pr), real_flag, L.field().characteristic());
}

std::optional<std::pair<std::int64_t, std::int64_t>> freeness_necessary(const SingularityProfile& pr) {
  mpz_class d = pr.d;
  mpz_class c = 1 - d;
  for (auto& [k, n] : pr.t) c += mpz_class(k - 1) * n;
  mpz_class disc = (d - 1) * (d - 1) - 4 * c;
  if (disc < 0) return std::nullopt;
  mpz_class s = sqrt(disc);
  if (s * s != disc) return std::nullopt;
  mpz_class a = d - 1 - s, b = d - 1 + s;
  if (a % 2 != 0) return std::nullopt;
  return std::make_pair(static_cast<std::int64_t>(mpz_class(a / 2).get_si()),
                        static_cast<std::int64_t>(mpz_class(b / 2).get_si()));
}

const char* degenerate_class_name(DegenerateClass c) {
  switch (c) {
    case DegenerateClass::Empty: return "empty";
    case DegenerateClass::Trivial: return "trivial";
    case DegenerateClass::QuasiTrivial: return "quasi-trivial";
    case DegenerateClass::FinitePlane: return "finite-plane";
    case DegenerateClass::Other: return "other";
  }
  return "?";
}

DegenerateClass classify_degenerate(const Arrangement& L) {
  if (L.empty()) return DegenerateClass::Empty;
  auto pr = profile(L);
  if (is_trivial(pr)) return DegenerateClass::Trivial;
  if (is_quasi_trivial(pr)) return DegenerateClass::QuasiTrivial;
  // a projective plane of order k-1: every singular point k-fold, t = d = k^2-k+1
  if (pr.t.size() == 1) {
    auto [k, n] = *pr.t.begin();
    if (k >= 3 && n == pr.d && pr.d == std::int64_t(k) * k - k + 1) return DegenerateClass::FinitePlane;
  }
  return DegenerateClass::Other;
}

KmResult is_km_configuration(const Arrangement& L, int k, int m) {
  KmResult r;
  r.s = static_cast<std::int64_t>(L.size());
  auto sel = MultiplicitySelector::exactly({k});
  auto idx = incidence_index(L, &sel);
  r.r = static_cast<std::int64_t>(idx.size());
  std::vector<int> per_line(L.size(), 0);
  for (auto& pi : idx)
    for (int l : pi.lines) ++per_line[l];
  r.ok = !L.empty() && std::all_of(per_line.begin(), per_line.end(), [&](int c) { return c == m; });
  return r;
}

bool configuration_connected(const Arrangement& L, int k) {
  auto sel = MultiplicitySelector::exactly({k});
  auto idx = incidence_index(L, &sel);
  if (idx.empty()) return false;
  std::vector<int> parent(idx.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> first_on_line(L.size(), -1);
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (int l : idx[p].lines) {
      if (first_on_line[l] < 0)
        first_on_line[l] = static_cast<int>(p);
      else
        parent[find(static_cast<int>(p))] = find(first_on_line[l]);
    }
  int root = find(0);
  for (std::size_t p = 1; p < idx.size(); ++p)
    if (find(static_cast<int>(p)) != root) return false;
  return true;
}

bool lambda_decomposition_check(const MultiplicitySelector& nsel, const MultiplicitySelector& msel, const Arrangement& L) {
  if (!nsel.is_finite() || !msel.is_finite())
    throw Error(ErrorKind::NotApplicable, "decomposition check needs finite selectors");
  Arrangement lhs = lambda_op(nsel, msel, L);
  Arrangement rhs(L.field());
  for (int a : nsel.exact)
    for (int b : msel.exact)
      rhs = set_union(rhs, lambda_op(MultiplicitySelector::exactly({a}), MultiplicitySelector::exactly({b}), L));
  return lhs == rhs;
}

}  // namespace lineops
