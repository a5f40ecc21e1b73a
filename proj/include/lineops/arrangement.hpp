#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lineops/error.hpp"
#include "lineops/projective.hpp"

namespace lineops {

// Sorted, duplicate-free set of points or lines living in one field.
template <class Elem>
class ElementSet {
 public:
  explicit ElementSet(Field f = Field()) : field_(std::move(f)) {}
  ElementSet(Field f, std::vector<Elem> items) : field_(std::move(f)), items_(std::move(items)) {
    for (auto& e : items_)
      if (e.field() != field_)
        throw Error(ErrorKind::FieldMismatch, "element over " + e.field().to_string() + " in a set over " + field_.to_string());
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  const Field& field() const { return field_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const Elem& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Elem>& items() const { return items_; }

  std::optional<std::size_t> index_of(const Elem& e) const {
    auto it = std::lower_bound(items_.begin(), items_.end(), e);
    if (it != items_.end() && *it == e) return static_cast<std::size_t>(it - items_.begin());
    return std::nullopt;
  }
  bool contains(const Elem& e) const { return index_of(e).has_value(); }
  bool includes(const ElementSet& o) const {
    same_field(o);
    return std::includes(items_.begin(), items_.end(), o.items_.begin(), o.items_.end());
  }

  bool operator==(const ElementSet& o) const {
    same_field(o);
    return items_ == o.items_;
  }
  bool operator!=(const ElementSet& o) const { return !(*this == o); }
  bool operator<(const ElementSet& o) const {
    return std::lexicographical_compare(items_.begin(), items_.end(), o.items_.begin(), o.items_.end());
  }

  // Full canonical serialization; equal strings iff equal sets.
  std::string canonical_text() const {
    std::string s = field_.to_string();
    for (auto& e : items_) s += "\n" + e.to_string();
    return s;
  }

  void same_field(const ElementSet& o) const {
    if (field_ != o.field_)
      throw Error(ErrorKind::FieldMismatch, "sets over " + field_.to_string() + " and " + o.field_.to_string());
  }

 private:
  Field field_;
  std::vector<Elem> items_;
};

using Arrangement = ElementSet<ProjLine>;
using PointConfig = ElementSet<ProjPoint>;

template <class E>
ElementSet<E> set_union(const ElementSet<E>& a, const ElementSet<E>& b) {
  a.same_field(b);
  std::vector<E> v(a.items());
  v.insert(v.end(), b.begin(), b.end());
  return ElementSet<E>(a.field(), std::move(v));
}

template <class E>
ElementSet<E> set_intersection(const ElementSet<E>& a, const ElementSet<E>& b) {
  a.same_field(b);
  std::vector<E> v;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  return ElementSet<E>(a.field(), std::move(v));
}

template <class E>
ElementSet<E> set_difference(const ElementSet<E>& a, const ElementSet<E>& b) {
  a.same_field(b);
  std::vector<E> v;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(v));
  return ElementSet<E>(a.field(), std::move(v));
}

struct MadeArrangement {
  Arrangement arrangement;
  std::size_t duplicates_dropped = 0;
};
MadeArrangement make_arrangement(const std::vector<Triple>& normals, const Field& f);
PointConfig make_point_config(const std::vector<Triple>& coords, const Field& f);

Arrangement dualize(const PointConfig& p);
PointConfig dualize(const Arrangement& l);

// ---- selectors

struct MultiplicitySelector {
  std::vector<int> exact;  // sorted, unique, all >= 2
  std::optional<int> at_least;

  static MultiplicitySelector at_least_n(int n);
  static MultiplicitySelector exactly(std::vector<int> ks);
  static MultiplicitySelector parse(const std::string& text);  // "2,3,>=5"

  bool contains(int k) const {
    if (at_least && k >= *at_least) return true;
    return std::binary_search(exact.begin(), exact.end(), k);
  }
  bool is_finite() const { return !at_least.has_value(); }
  int min() const;
  // every k accepted by *this is accepted by o
  bool subset_of(const MultiplicitySelector& o) const;
  std::string to_string() const;
  void validate() const;
};

// ---- incidence engine

struct PointIncidence {
  ProjPoint point;
  std::vector<int> lines;  // sorted indices into the arrangement
};

struct LineIncidence {
  ProjLine line;
  std::vector<int> points;
};

// Every point where >= 2 lines meet, with its incident lines, in canonical
// point order.  With a selector only those multiplicities are returned.
std::vector<PointIncidence> incidence_index(const Arrangement& L, const MultiplicitySelector* only = nullptr);
std::vector<LineIncidence> line_index(const PointConfig& P, const MultiplicitySelector* only = nullptr);

PointConfig points_operator(const MultiplicitySelector& sel, const Arrangement& L);
Arrangement lines_operator(const MultiplicitySelector& sel, const PointConfig& P);
Arrangement lambda_op(const MultiplicitySelector& nsel, const MultiplicitySelector& msel, const Arrangement& L);
PointConfig psi_op(const MultiplicitySelector& nsel, const MultiplicitySelector& msel, const PointConfig& P);
Arrangement dual_lines_op(const MultiplicitySelector& sel, const Arrangement& L);

// ---- profiles

struct SingularityProfile {
  std::int64_t d = 0;
  std::map<int, std::int64_t> t;  // only nonzero counts

  std::int64_t t_at(int k) const {
    auto it = t.find(k);
    return it == t.end() ? 0 : it->second;
  }
  std::int64_t singular_points() const;
  bool consistent() const;  // sum C(k,2) t_k == C(d,2)
  std::string to_string() const;  // "t2=6 t3=4 t4=3"
  bool operator==(const SingularityProfile& o) const { return d == o.d && t == o.t; }
};

SingularityProfile profile(const Arrangement& L);
SingularityProfile profile_from_map(std::int64_t d, std::map<int, std::int64_t> t);
mpq_class h_constant(const SingularityProfile& pr);

struct Slack {
  bool applicable = false;
  bool informational = false;
  std::int64_t value = 0;  // LHS - RHS
  std::string note;
};

struct InequalityReport {
  Slack hirzebruch, melchior, simpliciality, de_bruijn_erdos;
};

InequalityReport inequality_report(const Arrangement& L, bool real_flag);
InequalityReport inequality_report(const SingularityProfile& pr, bool trivial, bool quasi_trivial, bool real_flag,
                                   std::uint32_t characteristic);

std::optional<std::pair<std::int64_t, std::int64_t>> freeness_necessary(const SingularityProfile& pr);

enum class DegenerateClass { Empty, Trivial, QuasiTrivial, FinitePlane, Other };
const char* degenerate_class_name(DegenerateClass c);
DegenerateClass classify_degenerate(const Arrangement& L);

struct KmResult {
  bool ok = false;
  std::int64_t r = 0;  // number of k-points
  std::int64_t s = 0;  // number of lines
};
KmResult is_km_configuration(const Arrangement& L, int k, int m);
bool configuration_connected(const Arrangement& L, int k);

bool lambda_decomposition_check(const MultiplicitySelector& nsel, const MultiplicitySelector& msel, const Arrangement& L);

// ---- equivalence and conics

// A witness g with g(A) = B, or nothing.  Throws Degenerate if A has no four
// lines in general position.
std::optional<Projectivity> projectively_equivalent(const Arrangement& A, const Arrangement& B);

std::vector<RichConic> rich_conics(const PointConfig& P, int min_points);

}  // namespace lineops
