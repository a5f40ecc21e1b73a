#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lineops/arrangement.hpp"

namespace lineops {

// A built arrangement plus the order the builder produced the lines in
// (matroid labels follow that order).
struct Built {
  Arrangement arrangement;
  std::vector<ProjLine> labelled;
  std::vector<std::string> warnings;
  std::map<std::string, std::string> echo;  // parameters actually used, e.g. the final seed
};

// String-valued parameters as they come from the CLI or Python.
using CatalogParams = std::map<std::string, std::string>;

struct CatalogEntryInfo {
  std::string name;
  std::string params;    // human-readable schema
  std::string field;     // FieldSpec text, or "depends"
  std::string expected;  // profile text, or ""
  std::string summary;
  bool heavy = false;
};

const std::vector<CatalogEntryInfo>& catalog_entries();
const CatalogEntryInfo& catalog_entry(const std::string& name);
// Accepts '-' or '_' as separators.
Built build(const std::string& name, const CatalogParams& params = {});

namespace catalog {

Built from_normals(const std::vector<Triple>& normals, const Field& f);

Built trivial(int n);
Built quasi_trivial(int n);  // pencil of n-1 lines plus one line
Built generic(int n, std::uint64_t seed);
Built complete_quadrilateral(const Field& f = Field());
Built ceva(int n);
Built ceva_ext(int n);
Built dual_hesse();
Built maclane();
Built hesse();
Built grid6();
Built parallel_pairs6();
Built polygonal(int two_m);     // A1(2m)
Built polygonal_ext(int n);     // A1(4k+1), n = 4k+1
Built klein();
Built grunbaum_rigby();
Built wiman();
Built flashing3(const Scalar& t, bool allow_degenerate = false);
Built flashing4(const Scalar& t, bool full, bool allow_degenerate = false);
Projectivity flashing_gamma(const Scalar& t);
Built unassuming(const Scalar& t, bool allow_degenerate = false);
Built gv13(const Scalar& a, int sign);
Built pappus(const std::vector<mpq_class>& s = {1, 2, 4}, const std::vector<mpq_class>& u = {1, 3, -2});
Built hexagon_on_conic(const std::vector<mpq_class>& s = {0, 1, 3, 7, -2, -5});
Built desargues9();
Built finite_plane(std::uint32_t q);
Built reye();

PointConfig generic_points_on_conic(int n, std::uint64_t seed, std::uint64_t* used_seed = nullptr);
PointConfig regular_hexagon_points();  // over Q(sqrt 3)
PointConfig pappus_points(const std::vector<mpq_class>& s = {1, 2, 4}, const std::vector<mpq_class>& u = {1, 3, -2});

// The non-bases listed for the 13-line Zariski pair, 0-based.
std::vector<std::vector<int>> gv13_listed_flats();

}  // namespace catalog
}  // namespace lineops
