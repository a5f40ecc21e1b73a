#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lineops/error.hpp"
#include "lineops/projective.hpp"

using namespace lineops;

namespace {

ProjPoint pt(const Field& f, long a, long b, long c) { return ProjPoint(make_triple(f, a, b, c)); }
ProjLine ln(const Field& f, long a, long b, long c) { return ProjLine(make_triple(f, a, b, c)); }

Scalar dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

TEST_CASE("normalization: leftmost nonzero entry is 1") {
  Field q;
  auto p = pt(q, 0, 4, -6);
  CHECK(p[0].is_zero());
  CHECK(p[1].is_one());
  CHECK(p[2].to_string() == "-3/2");
  CHECK(pt(q, 2, 4, 6) == pt(q, -1, -2, -3));
  CHECK_THROWS_AS(pt(q, 0, 0, 0), Error);
}

TEST_CASE("join and meet are incident, checked by dot products") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (const char* ft : {"Q", "GF(7)", "Q[x]/(x^2+1)"}) {
    Field f = Field::parse(ft);
    for (int it = 0; it < 40; ++it) {
      Triple a = make_triple(f, d(rng), d(rng), d(rng)), b = make_triple(f, d(rng), d(rng), d(rng));
      if (triple_is_zero(a) || triple_is_zero(b) || triple_is_zero(cross(a, b))) continue;
      ProjPoint p(a), q(b);
      auto l = join(p, q);
      CHECK(dot(l.coords(), p.coords()).is_zero());
      CHECK(dot(l.coords(), q.coords()).is_zero());
      CHECK(incident(p, l));
      ProjLine m(a), n(b);
      auto x = meet(m, n);
      CHECK(incident(x, m));
      CHECK(incident(x, n));
    }
  }
}

TEST_CASE("join of a point with itself is degenerate") {
  Field q;
  CHECK_THROWS_AS(join(pt(q, 1, 2, 3), pt(q, 2, 4, 6)), Error);
}

TEST_CASE("collinear and concurrent") {
  Field q;
  CHECK(collinear(pt(q, 1, 0, 1), pt(q, 0, 1, 1), pt(q, 1, 1, 2)));
  CHECK_FALSE(collinear(pt(q, 1, 0, 0), pt(q, 0, 1, 0), pt(q, 0, 0, 1)));
  CHECK(concurrent(ln(q, 1, 0, 0), ln(q, 0, 1, 0), ln(q, 1, 1, 0)));
}

TEST_CASE("matrix inverse and determinant") {
  Field q;
  Matrix3 m = {make_triple(q, 2, 1, 0), make_triple(q, 0, 1, 3), make_triple(q, 1, 0, 1)};
  CHECK(det(m) == q.from_int(5));
  auto id = matmul(m, inverse(m));
  CHECK(id == identity_matrix(q));
  Matrix3 s = {make_triple(q, 1, 2, 3), make_triple(q, 2, 4, 6), make_triple(q, 0, 0, 1)};
  CHECK_THROWS_AS(inverse(s), Error);
}

TEST_CASE("projectivity preserves incidence and composes") {
  Field q;
  Matrix3 m = {make_triple(q, 1, 2, 0), make_triple(q, 0, 1, 1), make_triple(q, 3, 0, 1)};
  auto g = Projectivity::from_point_matrix(m);
  auto p = pt(q, 1, 1, 1), r = pt(q, 2, -1, 5);
  auto l = join(p, r);
  CHECK(incident(g.apply(p), g.apply(l)));
  CHECK(incident(g.apply(r), g.apply(l)));
  CHECK(g.compose(g.inverse()).is_identity());
  auto h = Projectivity::from_line_matrix(m);
  CHECK(h.apply(l) == ProjLine(lineops::apply(m, l.coords())));
}

TEST_CASE("projectivity from four line frames") {
  Field q;
  std::array<ProjLine, 4> a = {ln(q, 1, 0, 0), ln(q, 0, 1, 0), ln(q, 0, 0, 1), ln(q, 1, 1, 1)};
  std::array<ProjLine, 4> b = {ln(q, 1, 2, 0), ln(q, 0, 1, 5), ln(q, 1, 0, 1), ln(q, 1, -1, 3)};
  auto g = projectivity_from_line_frames(a, b);
  for (int i = 0; i < 4; ++i) CHECK(g.apply(a[i]) == b[i]);
  std::array<ProjLine, 4> bad = {ln(q, 1, 0, 0), ln(q, 0, 1, 0), ln(q, 1, 1, 0), ln(q, 0, 0, 1)};
  CHECK_THROWS_AS(projectivity_from_line_frames(bad, b), Error);
}

TEST_CASE("conic through five points") {
  Field q;
  // points on y z = x^2
  std::array<ProjPoint, 5> ps = {pt(q, 0, 0, 1), pt(q, 1, 1, 1), pt(q, 2, 4, 1), pt(q, -1, 1, 1), pt(q, 3, 9, 1)};
  auto c = Conic::through(ps);
  for (auto& p : ps) CHECK(c.contains(p));
  CHECK(c.contains(pt(q, 5, 25, 1)));
  CHECK_FALSE(c.contains(pt(q, 5, 24, 1)));
  CHECK(c.is_irreducible());
  // two lines
  std::array<ProjPoint, 5> two = {pt(q, 0, 0, 1), pt(q, 1, 0, 1), pt(q, 2, 0, 1), pt(q, 0, 1, 1), pt(q, 0, 2, 1)};
  CHECK_FALSE(Conic::through(two).is_irreducible());
}

TEST_CASE("duality swaps points and lines") {
  Field q;
  auto p = pt(q, 1, 2, 3);
  CHECK(dualize(dualize(p)) == p);
  CHECK(dualize(p).coords() == p.coords());
}
