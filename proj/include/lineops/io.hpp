#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "lineops/arrangement.hpp"
#include "lineops/dynamics.hpp"
#include "lineops/matroid.hpp"

namespace lineops {

using Json = nlohmann::json;

// {"field": "...", "lines": [[c, c, c], ...]} or the same with "points".
// Coefficients are strings in the field's scalar syntax; plain JSON integers
// are accepted on input.
struct Document {
  Field field;
  bool is_points = false;
  std::vector<ProjLine> lines;    // input order, duplicates removed
  std::vector<ProjPoint> points;  // likewise
  std::size_t duplicates_dropped = 0;

  Arrangement arrangement() const;  // throws NotApplicable for a point document
  PointConfig point_config() const;
};

Document read_document(const Json& j);
Document read_document_text(const std::string& text);

Json to_json(const Arrangement& L);
Json to_json(const PointConfig& P);
Json lines_json(const Field& f, const std::vector<ProjLine>& lines);  // keeps the given order

std::string rational_text(const mpq_class& q);  // "p/q", or "p" when integral
Json profile_json(const SingularityProfile& pr);
Json trace_json(const SequenceTrace& tr, bool with_lines = false);

Json matroid_json(const Matroid3& m);
Matroid3 matroid_from_json(const Json& j);

}  // namespace lineops
