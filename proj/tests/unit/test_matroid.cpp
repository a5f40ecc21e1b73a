#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lineops/catalog.hpp"
#include "lineops/matroid.hpp"

using namespace lineops;

namespace {

// Brute-force isomorphism over all permutations (small ground sets only).
bool brute_iso(const Matroid3& a, const Matroid3& b) {
  if (a.ground() != b.ground()) return false;
  std::vector<int> p(a.ground());
  std::iota(p.begin(), p.end(), 0);
  auto nb = b.nonbases();
  do {
    std::vector<std::vector<int>> img;
    for (auto& t : a.nonbases()) {
      std::vector<int> u = {p[t[0]], p[t[1]], p[t[2]]};
      std::sort(u.begin(), u.end());
      img.push_back(u);
    }
    std::sort(img.begin(), img.end());
    if (img == nb) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Matroid3 relabel(const Matroid3& m, const std::vector<int>& p) {
  std::vector<std::vector<int>> f;
  for (auto& fl : m.flats()) {
    std::vector<int> g;
    for (int e : fl) g.push_back(p[e]);
    f.push_back(g);
  }
  return Matroid3(m.ground(), f);
}

bool is_iso_witness(const Matroid3& a, const Matroid3& b, const std::vector<int>& phi) {
  return relabel(a, phi) == b;
}

}  // namespace

TEST_CASE("Fano matroid from PG(2,2)") {
  auto m = extract_matroid(catalog::finite_plane(2).arrangement);
  CHECK(m.ground() == 7);
  CHECK(m.flats().size() == 7);
  for (auto& f : m.flats()) CHECK(f.size() == 3);
  CHECK(m.nonbases().size() == 7);
}

TEST_CASE("two flats may share at most one element") {
  CHECK_THROWS_AS(Matroid3(5, {{0, 1, 2}, {0, 1, 3}}), Error);
  Matroid3 m(5, {{0, 1}, {2, 3, 4}});
  CHECK(m.flats().size() == 1);
}

TEST_CASE("relabelled Fano is isomorphic, with a valid witness") {
  auto m = extract_matroid(catalog::finite_plane(2).arrangement);
  std::vector<int> p = {3, 6, 0, 5, 1, 4, 2};
  auto r = relabel(m, p);
  auto phi = matroid_isomorphic(m, r);
  REQUIRE(phi);
  CHECK(is_iso_witness(m, r, *phi));
}

TEST_CASE("search agrees with brute force on small matroids") {
  std::mt19937 rng(5);
  std::vector<Matroid3> pool = {extract_matroid(catalog::finite_plane(2).arrangement),
                                extract_matroid(catalog::complete_quadrilateral().arrangement),
                                extract_matroid(catalog::ceva(2).arrangement),
                                extract_matroid(catalog::trivial(7).arrangement),
                                extract_matroid(catalog::quasi_trivial(7).arrangement),
                                Matroid3(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}),
                                Matroid3(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}),
                                Matroid3(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}})};
  for (auto& a : pool)
    for (auto& b : pool) {
      auto phi = matroid_isomorphic(a, b);
      CHECK(phi.has_value() == brute_iso(a, b));
      if (phi) CHECK(is_iso_witness(a, b, *phi));
    }
  // random relabellings of a pool member
  for (int it = 0; it < 10; ++it) {
    std::vector<int> p(7);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto r = relabel(pool[5], p);
    CHECK(matroid_isomorphic(pool[5], r).has_value());
    CHECK_FALSE(matroid_isomorphic(pool[6], r).has_value());
  }
}

TEST_CASE("flashing incidence matrix") {
  auto m3 = flashing_incidence(3);
  CHECK(m3.rows == 10);
  CHECK(m3.cols == 9);
  for (int n : {3, 4, 5}) {
    auto M = flashing_incidence(n);
    CHECK(M.rows == n * n + 1);
    // every column has n+1 ones... except that is not required; count them
    std::vector<int> col(M.cols, 0);
    for (auto& r : M.entries)
      for (int c = 0; c < M.cols; ++c) col[c] += r[c];
    for (int c = 0; c < M.cols; ++c) CHECK(col[c] >= n);
    CHECK(M.to_matroid().flats().size() == std::size_t(n * n + 1));
  }
  CHECK_THROWS_AS(flashing_incidence(2), Error);
}

TEST_CASE("flashing incidence realised by the builds") {
  Field q;
  auto t = q.from_int(3);
  auto u3 = catalog::flashing3(t);
  auto F1 = lambda_op(MultiplicitySelector::at_least_n(2), MultiplicitySelector::at_least_n(3), u3.arrangement);
  auto U = set_union(u3.arrangement, F1);
  CHECK(matroid_isomorphic(extract_matroid(U), flashing_incidence(3).to_matroid()).has_value());
  auto f4 = catalog::flashing4(t, true);
  CHECK(matroid_isomorphic(extract_matroid(f4.labelled), flashing_incidence(4).to_matroid()).has_value());
}

TEST_CASE("Reye and the 12-line flashing arrangement are not isomorphic") {
  Field q;
  auto reye = extract_matroid(catalog::reye().arrangement);
  auto f12 = extract_matroid(catalog::flashing4(q.from_int(3), true).arrangement);
  CHECK(reye.ground() == 12);
  CHECK(f12.ground() == 12);
  CHECK_FALSE(matroid_isomorphic(reye, f12).has_value());
}

TEST_CASE("gv13 flats match the listed non-bases for both signs") {
  Field q;
  Matroid3 listed(13, catalog::gv13_listed_flats());
  for (int s : {1, -1}) CHECK(extract_matroid(catalog::gv13(q.from_int(2), s).labelled) == listed);
}
