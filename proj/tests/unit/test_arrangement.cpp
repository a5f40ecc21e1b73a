#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "lineops/arrangement.hpp"
#include "lineops/catalog.hpp"

using namespace lineops;
using S = MultiplicitySelector;

namespace {

// Pairwise meets, then multiplicity by counting incident lines directly.
std::map<ProjPoint, int> brute_points(const Arrangement& L) {
  std::set<ProjPoint> cand;
  for (std::size_t i = 0; i < L.size(); ++i)
    for (std::size_t j = i + 1; j < L.size(); ++j) cand.insert(meet(L[i], L[j]));
  std::map<ProjPoint, int> m;
  for (auto& p : cand) {
    int k = 0;
    for (auto& l : L) k += incident(p, l);
    m[p] = k;
  }
  return m;
}

std::map<int, std::int64_t> brute_profile(const Arrangement& L) {
  std::map<int, std::int64_t> t;
  for (auto& [p, k] : brute_points(L)) ++t[k];
  return t;
}

Arrangement brute_lines(const S& sel, const PointConfig& P) {
  std::set<ProjLine> cand;
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) cand.insert(join(P[i], P[j]));
  std::vector<ProjLine> out;
  for (auto& l : cand) {
    int k = 0;
    for (auto& p : P) k += incident(p, l);
    if (sel.contains(k)) out.push_back(l);
  }
  return Arrangement(P.field(), out);
}

Arrangement random_arrangement(const Field& f, int n, int range, std::mt19937& rng) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<ProjLine> v;
  while (static_cast<int>(v.size()) < n) {
    auto t = make_triple(f, d(rng), d(rng), d(rng));
    if (triple_is_zero(t)) continue;
    v.emplace_back(t);
  }
  return Arrangement(f, v);
}

}  // namespace

TEST_CASE("incidence engine agrees with brute force on random arrangements") {
  std::mt19937 rng(11);
  for (const char* ft : {"Q", "GF(5)", "GF(7)", "Q[x]/(x^2+x+1)"}) {
    Field f = Field::parse(ft);
    for (int it = 0; it < 25; ++it) {
      // small coefficient range forces many concurrencies
      auto L = random_arrangement(f, 4 + it % 9, 2, rng);
      auto pr = profile(L);
      CHECK(pr.t == brute_profile(L));
      CHECK(pr.consistent());
      auto bp = brute_points(L);
      for (auto& pi : incidence_index(L)) {
        REQUIRE(bp.count(pi.point));
        CHECK(static_cast<int>(pi.lines.size()) == bp[pi.point]);
        for (int i : pi.lines) CHECK(incident(pi.point, L[i]));
      }
      for (auto sel : {S::at_least_n(2), S::at_least_n(3), S::exactly({2}), S::exactly({3, 4})}) {
        auto P = points_operator(sel, L);
        std::vector<ProjPoint> want;
        for (auto& [p, k] : bp)
          if (sel.contains(k)) want.push_back(p);
        CHECK(P == PointConfig(f, want));
        for (auto msel : {S::at_least_n(2), S::at_least_n(3), S::exactly({2})})
          CHECK(lines_operator(msel, P) == brute_lines(msel, P));
      }
    }
  }
}

TEST_CASE("complete quadrilateral profile and H-constant") {
  auto L = catalog::complete_quadrilateral().arrangement;
  auto pr = profile(L);
  CHECK(pr.d == 6);
  CHECK(pr.t == std::map<int, std::int64_t>{{2, 3}, {3, 4}});
  CHECK(h_constant(pr) == mpq_class(-12, 7));
}

TEST_CASE("selectors parse and print") {
  auto s = S::parse("2,3,>=5");
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(4));
  CHECK(s.contains(9));
  CHECK(s.min() == 2);
  CHECK(S::parse(s.to_string()).to_string() == s.to_string());
  CHECK(S::exactly({3}).subset_of(S::at_least_n(2)));
  CHECK_FALSE(S::at_least_n(2).subset_of(S::exactly({2, 3})));
  CHECK_THROWS_AS(S::parse("1"), Error);
  CHECK_THROWS_AS(S::parse(""), Error);
}

TEST_CASE("duality conjugation on catalog arrangements") {
  for (auto L : {catalog::complete_quadrilateral().arrangement, catalog::dual_hesse().arrangement,
                 catalog::ceva(3).arrangement, catalog::polygonal(8).arrangement}) {
    for (auto [n, m] : {std::pair{S::at_least_n(2), S::at_least_n(2)}, std::pair{S::at_least_n(3), S::exactly({2})},
                        std::pair{S::exactly({2}), S::at_least_n(3)}}) {
      CHECK(dualize(lambda_op(n, m, L)) == psi_op(n, m, dualize(L)));
    }
  }
}

TEST_CASE("decomposition into singleton selectors") {
  using V = std::vector<int>;
  CHECK(lambda_decomposition_check(S::exactly({2, 3}), S::exactly({2, 3}), catalog::complete_quadrilateral().arrangement));
  CHECK(lambda_decomposition_check(S::exactly({3}), S::exactly({3, 4}), catalog::dual_hesse().arrangement));
  CHECK(lambda_decomposition_check(S::exactly({2, 3}), S::exactly({2}), catalog::generic(8, 5).arrangement));
  // a line with one double and one triple point lies in no singleton image
  auto Q = catalog::quasi_trivial(4).arrangement;
  CHECK_FALSE(lambda_decomposition_check(S::exactly(V{2, 3}), S::exactly(V{2, 3}), Q));
  CHECK(lambda_op(S::exactly({2, 3}), S::exactly({2, 3}), Q).size() == 4);
  CHECK_THROWS_AS(lambda_decomposition_check(S::at_least_n(2), S::exactly({2}), Q), Error);
}

TEST_CASE("dual lines operator is L_n of the dual points") {
  auto L = catalog::complete_quadrilateral().arrangement;
  CHECK(dual_lines_op(S::exactly({2}), L) == lines_operator(S::exactly({2}), dualize(L)));
}

TEST_CASE("degenerate classes") {
  CHECK(classify_degenerate(Arrangement()) == DegenerateClass::Empty);
  CHECK(classify_degenerate(catalog::trivial(5).arrangement) == DegenerateClass::Trivial);
  CHECK(classify_degenerate(catalog::quasi_trivial(5).arrangement) == DegenerateClass::QuasiTrivial);
  CHECK(classify_degenerate(catalog::finite_plane(3).arrangement) == DegenerateClass::FinitePlane);
  CHECK(classify_degenerate(catalog::ceva(3).arrangement) == DegenerateClass::Other);
}

TEST_CASE("configurations") {
  auto fano = catalog::finite_plane(2).arrangement;
  auto km = is_km_configuration(fano, 3, 3);
  CHECK(km.ok);
  CHECK(km.r == 7);
  CHECK(km.s == 7);
  CHECK(configuration_connected(fano, 3));
  CHECK_FALSE(is_km_configuration(catalog::complete_quadrilateral().arrangement, 3, 3).ok);
}

TEST_CASE("inequality report and freeness") {
  auto H = catalog::hesse().arrangement;
  auto fr = freeness_necessary(profile(H));
  REQUIRE(fr);
  CHECK(*fr == std::pair<std::int64_t, std::int64_t>{4, 7});
  auto rep = inequality_report(catalog::polygonal(10).arrangement, true);
  CHECK(rep.melchior.applicable);
  CHECK(rep.melchior.value >= 0);
  CHECK(rep.de_bruijn_erdos.value >= 0);
  // Melchior fails over C: the dual Hesse has no double points
  auto dh = inequality_report(catalog::dual_hesse().arrangement, false);
  CHECK_FALSE(dh.melchior.applicable);
}

TEST_CASE("projective equivalence") {
  auto A = catalog::complete_quadrilateral().arrangement;
  auto B = catalog::ceva(2).arrangement;
  CHECK(projectively_equivalent(A, B).has_value());
  CHECK_FALSE(projectively_equivalent(A, catalog::generic(6, 1).arrangement).has_value());
  CHECK_THROWS_AS(projectively_equivalent(catalog::trivial(4).arrangement, catalog::trivial(4).arrangement), Error);
}

TEST_CASE("field mismatch in set operations") {
  auto A = catalog::complete_quadrilateral().arrangement;
  auto B = catalog::finite_plane(2).arrangement;
  CHECK_THROWS_AS((void)(A == B), Error);
}
