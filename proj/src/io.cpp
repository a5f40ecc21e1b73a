#include "lineops/io.hpp"

#include <set>

namespace lineops {

namespace {

Scalar read_scalar(const Field& f, const Json& v) {
  if (v.is_string()) return f.parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return f.from_int(v.get<long>());
  throw Error(ErrorKind::Parse, "coefficient must be a string or an integer, got " + v.dump());
}

Triple read_triple(const Field& f, const Json& v) {
  if (!v.is_array() || v.size() != 3) throw Error(ErrorKind::Parse, "expected a triple, got " + v.dump());
  return {read_scalar(f, v[0]), read_scalar(f, v[1]), read_scalar(f, v[2])};
}

template <class E>
Json triples(const std::vector<E>& items) {
  Json a = Json::array();
  for (auto& e : items) a.push_back({e[0].to_string(), e[1].to_string(), e[2].to_string()});
  return a;
}

template <class E>
std::vector<E> dedup_in_order(std::vector<E> v, std::size_t& dropped) {
  std::set<E> seen;
  std::vector<E> out;
  for (auto& e : v)
    if (seen.insert(e).second) out.push_back(std::move(e));
  dropped = v.size() - out.size();
  return out;
}

}  // namespace

Arrangement Document::arrangement() const {
  if (is_points) throw Error(ErrorKind::NotApplicable, "document holds points, not lines");
  return Arrangement(field, lines);
}

PointConfig Document::point_config() const {
  if (!is_points) throw Error(ErrorKind::NotApplicable, "document holds lines, not points");
  return PointConfig(field, points);
}

Document read_document(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "document must be a JSON object");
  Document d;
  if (j.contains("field")) {
    if (!j["field"].is_string()) throw Error(ErrorKind::Parse, "\"field\" must be a string");
    d.field = Field::parse(j["field"].get<std::string>());
  }
  bool has_lines = j.contains("lines"), has_points = j.contains("points");
  if (has_lines == has_points) throw Error(ErrorKind::Parse, "document needs exactly one of \"lines\" or \"points\"");
  const Json& arr = has_lines ? j["lines"] : j["points"];
  if (!arr.is_array()) throw Error(ErrorKind::Parse, "coordinates must be an array");
  d.is_points = has_points;
  if (has_lines) {
    std::vector<ProjLine> v;
    for (auto& t : arr) v.emplace_back(read_triple(d.field, t));
    d.lines = dedup_in_order(std::move(v), d.duplicates_dropped);
  } else {
    std::vector<ProjPoint> v;
    for (auto& t : arr) v.emplace_back(read_triple(d.field, t));
    d.points = dedup_in_order(std::move(v), d.duplicates_dropped);
  }
  return d;
}

Document read_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  return read_document(j);
}

Json to_json(const Arrangement& L) { return lines_json(L.field(), L.items()); }

Json to_json(const PointConfig& P) {
  return Json{{"field", P.field().to_string()}, {"points", triples(P.items())}};
}

Json lines_json(const Field& f, const std::vector<ProjLine>& lines) {
  return Json{{"field", f.to_string()}, {"lines", triples(lines)}};
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

Json profile_json(const SingularityProfile& pr) {
  Json t = Json::object();
  for (auto& [k, n] : pr.t) t[std::to_string(k)] = n;
  return Json{{"d", pr.d}, {"t", t}};
}

Json trace_json(const SequenceTrace& tr, bool with_lines) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < tr.steps.size(); ++i) {
    auto& st = tr.steps[i];
    Json s{{"step", st.index}, {"lines", st.lines}, {"digest", st.digest}};
    if (st.profile) s["t"] = profile_json(*st.profile)["t"];
    if (st.h) {
      s["H"] = rational_text(*st.h);
      s["H_approx"] = st.h->get_d();
    }
    if (with_lines) s["arrangement"] = to_json(tr.arrangements[i]);
    steps.push_back(std::move(s));
  }
  Json v{{"kind", verdict_name(tr.verdict)}, {"text", tr.verdict_text()}};
  if (tr.verdict == Verdict::Fixed) v["fixed_at"] = tr.fixed_at;
  if (tr.verdict == Verdict::Cycle) {
    v["preperiod"] = tr.preperiod;
    v["period"] = tr.period;
  }
  if (tr.verdict == Verdict::Extinguished) v["length"] = tr.length;
  if (!tr.note.empty()) v["note"] = tr.note;
  return Json{{"operator", tr.op},
              {"budgets",
               {{"max_steps", tr.budgets.max_steps},
                {"max_lines", tr.budgets.max_lines},
                {"profile_lines", tr.budgets.profile_lines},
                {"max_points", tr.budgets.max_points}}},
              {"steps", steps},
              {"verdict", v},
              {"growth_bound_violations", tr.growth_bound_violations}};
}

Json matroid_json(const Matroid3& m) { return Json{{"ground", m.ground()}, {"flats", m.flats()}}; }

Matroid3 matroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("flats"))
    throw Error(ErrorKind::Parse, "matroid JSON needs \"ground\" and \"flats\"");
  try {
    return Matroid3(j["ground"].get<int>(), j["flats"].get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("bad matroid JSON: ") + e.what());
  }
}

}  // namespace lineops
