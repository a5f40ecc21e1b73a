#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lineops/arrangement.hpp"

namespace lineops {

// Simple rank-3 matroid given by its rank-2 flats of size >= 3.  Pairs not
// covered by a stored flat span a flat of size 2.
class Matroid3 {
 public:
  Matroid3() = default;
  // Sorts everything, drops flats of size < 3 and checks that two flats share
  // at most one element.
  Matroid3(int ground, std::vector<std::vector<int>> flats);

  int ground() const { return m_; }
  const std::vector<std::vector<int>>& flats() const { return flats_; }
  bool is_nonbasis(int a, int b, int c) const;
  // flat sizes per element, sorted descending
  std::vector<int> element_signature(int e) const;
  std::vector<std::vector<int>> nonbases() const;  // all dependent triples, sorted

  bool operator==(const Matroid3& o) const { return m_ == o.m_ && flats_ == o.flats_; }

 private:
  int m_ = 0;
  std::vector<std::vector<int>> flats_;
};

// Flats are the points of multiplicity >= 3, labelled by position in `lines`.
Matroid3 extract_matroid(const std::vector<ProjLine>& lines);
// Labels follow the sorted order of the arrangement.
Matroid3 extract_matroid(const Arrangement& L);

// phi[i] is the image of element i of a.  First witness in lexicographic
// order of the search, or nullopt.
std::optional<std::vector<int>> matroid_isomorphic(const Matroid3& a, const Matroid3& b);

struct IncidenceMatrix {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::uint8_t>> entries;

  Matroid3 to_matroid() const;
  std::string to_string() const;
};

// (n^2+1) x 3n: blocks [C_k | I_n | G^(k-1)] for k = 1..n, G the cyclic shift
// e_i -> e_{i+1}, then the row marking the n-fold point of the middle block.
IncidenceMatrix flashing_incidence(int n);

}  // namespace lineops
