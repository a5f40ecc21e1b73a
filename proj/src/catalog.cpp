#include "lineops/catalog.hpp"

#include <functional>
#include <random>
#include <set>

namespace lineops {
namespace catalog {

namespace {

using Expected = std::map<int, std::int64_t>;

Scalar sc(const Field& f, const char* text) { return f.parse_scalar(text); }

Triple tri(const Scalar& a, const Scalar& b, const Scalar& c) { return {a, b, c}; }

Triple tri(const Field& f, long a, long b, long c) { return make_triple(f, a, b, c); }

void expect(const Built& b, const std::string& what, std::size_t lines, const Expected& t) {
  auto pr = profile(b.arrangement);
  auto want = profile_from_map(static_cast<std::int64_t>(lines), t);
  if (!(pr == want))
    throw Error(ErrorKind::ProfileMismatch, what + ": built d=" + std::to_string(pr.d) + " " + pr.to_string() +
                                                ", expected d=" + std::to_string(want.d) + " " + want.to_string());
}

// 2cos(j theta) and sin((j+1) theta)/sin(theta) as polynomials in c = 2cos(theta)
Scalar cheb_d(int j, const Scalar& c) {
  Scalar a = c.field().from_int(2), b = c;
  if (j == 0) return a;
  for (int i = 1; i < j; ++i) {
    Scalar n = c * b - a;
    a = b;
    b = n;
  }
  return b;
}

Scalar cheb_u(int j, const Scalar& c) {
  if (j < 0) return c.field().zero();
  Scalar a = c.field().one(), b = c;
  if (j == 0) return a;
  for (int i = 1; i < j; ++i) {
    Scalar n = c * b - a;
    a = b;
    b = n;
  }
  return b;
}

// Field Q(2cos(2pi/n)) with its generator, or Q with the rational value.
std::pair<Field, Scalar> real_cyclotomic_field(int n) {
  QPoly f = poly::real_cyclotomic(n);
  if (poly::degree(f) == 1) {
    Field q;
    return {q, q.from_rational(-f[0] / f[1])};
  }
  Field k(FieldSpec::number_field(f));
  return {k, k.generator()};
}

bool in_set(const Scalar& t, std::initializer_list<const char*> vals) {
  for (auto v : vals)
    if (t == t.field().parse_scalar(v)) return true;
  return false;
}

void forbid(Built& b, bool bad, bool allow, const std::string& name, const std::string& set, const Scalar& t) {
  if (!bad) return;
  std::string msg = name + ": t = " + t.to_string() + " lies in the forbidden set " + set;
  if (!allow) throw Error(ErrorKind::DegenerateParameter, msg);
  b.warnings.push_back(msg + " (degenerate build, profile not validated)");
}

}  // namespace

Built from_normals(const std::vector<Triple>& normals, const Field& f) {
  Built b;
  for (auto& t : normals) {
    for (auto& s : t)
      if (s.field() != f) throw Error(ErrorKind::FieldMismatch, "coefficient not in " + f.to_string());
    b.labelled.emplace_back(t);
  }
  b.arrangement = Arrangement(f, b.labelled);
  return b;
}

Built trivial(int n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "trivial needs n >= 1");
  Field q;
  std::vector<Triple> v;
  for (int k = 0; k < n; ++k) v.push_back(tri(q, 1, k, 0));
  auto b = from_normals(v, q);
  if (n >= 2) expect(b, "trivial", n, {{n, 1}});
  return b;
}

Built quasi_trivial(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "quasi_trivial needs n >= 3");
  Field q;
  std::vector<Triple> v;
  for (int k = 0; k < n - 1; ++k) v.push_back(tri(q, 1, k, 0));
  v.push_back(tri(q, 0, 0, 1));
  auto b = from_normals(v, q);
  Expected e{{n - 1, 1}};
  e[2] += n - 1;
  expect(b, "quasi_trivial", n, e);
  return b;
}

Built generic(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "generic needs n >= 1");
  Field q;
  for (int round = 0; round < 32; ++round) {
    std::uint64_t s = seed + round;
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<long> coef(-9, 9);
    std::vector<Triple> v;
    for (int i = 0; i < n; ++i) {
      long a, b, c;
      do {
        a = coef(rng);
        b = coef(rng);
        c = coef(rng);
      } while (a == 0 && b == 0 && c == 0);
      v.push_back(tri(q, a, b, c));
    }
    auto b = from_normals(v, q);
    if (b.arrangement.size() != static_cast<std::size_t>(n)) continue;
    auto pr = profile(b.arrangement);
    if (n >= 2 && !(pr.t.size() == 1 && pr.t_at(2) == std::int64_t(n) * (n - 1) / 2)) continue;
    b.echo["seed"] = std::to_string(s);
    return b;
  }
  throw Error(ErrorKind::Unrealizable,
              "no general-position draw within 32 rounds from seed " + std::to_string(seed));
}

Built complete_quadrilateral(const Field& f) {
  auto b = from_normals({tri(f, 1, 0, 0), tri(f, 0, 1, 0), tri(f, 0, 0, 1), tri(f, 1, -1, 0), tri(f, 1, 0, -1),
                         tri(f, 0, 1, -1)},
                        f);
  expect(b, "complete_quadrilateral", 6, {{2, 3}, {3, 4}});
  return b;
}

namespace {

Built ceva_lines(int n, bool ext) {
  if (n < 2 || n > 30) throw Error(ErrorKind::OutOfRange, "ceva needs 2 <= n <= 30");
  Field f = n == 2 ? Field() : Field(FieldSpec::number_field(poly::cyclotomic(n)));
  Scalar z = n == 2 ? f.from_int(-1) : f.generator();
  Scalar o = f.one(), zero = f.zero();
  std::vector<Triple> v;
  Scalar p = o;
  for (int i = 0; i < n; ++i, p = p * z) {
    v.push_back(tri(o, -p, zero));
    v.push_back(tri(o, zero, -p));
    v.push_back(tri(zero, o, -p));
  }
  if (ext) {
    v.push_back(tri(o, zero, zero));
    v.push_back(tri(zero, o, zero));
    v.push_back(tri(zero, zero, o));
  }
  return from_normals(v, f);
}

}  // namespace

Built ceva(int n) {
  auto b = ceva_lines(n, false);
  Expected e{{3, std::int64_t(n) * n}};
  e[n] += 3;
  if (n == 2) e = {{2, 3}, {3, 4}};
  expect(b, "ceva", 3 * n, e);
  return b;
}

Built ceva_ext(int n) {
  auto b = ceva_lines(n, true);
  Expected e{{2, 3 * n}, {3, std::int64_t(n) * n}};
  e[n + 2] += 3;
  expect(b, "ceva_ext", 3 * n + 3, e);
  return b;
}

Built dual_hesse() {
  Field f = Field::parse("Q[x]/(x^2+x+1)");
  Scalar w = f.generator(), w2 = w * w, o = f.one(), z = f.zero();
  auto b = from_normals({tri(-o, z, o), tri(-o, o, z), tri(z, -o, o), tri(-w, z, o), tri(-w, o, z), tri(-w2, z, o),
                         tri(-w2, o, z), tri(z, -w2, o), tri(z, -w, o)},
                        f);
  expect(b, "dual_hesse", 9, {{3, 12}});
  return b;
}

Built maclane() {
  auto h = dual_hesse();
  std::vector<Triple> v;
  for (std::size_t i = 1; i < h.labelled.size(); ++i) v.push_back(h.labelled[i].coords());
  auto b = from_normals(v, h.arrangement.field());
  expect(b, "maclane", 8, {{2, 4}, {3, 8}});
  return b;
}

Built hesse() {
  auto ml = maclane();
  Built b;
  b.arrangement = lambda_op(MultiplicitySelector::at_least_n(3), MultiplicitySelector::at_least_n(2), ml.arrangement);
  b.labelled = b.arrangement.items();
  expect(b, "hesse", 12, {{2, 12}, {4, 9}});
  return b;
}

Built grid6() {
  Field q;
  auto b = from_normals(
      {tri(q, 1, 0, 0), tri(q, 1, 0, 1), tri(q, 1, 0, -1), tri(q, 0, 1, 0), tri(q, 0, 1, 1), tri(q, 0, 1, -1)}, q);
  expect(b, "grid6", 6, {{2, 9}, {3, 2}});
  return b;
}

Built parallel_pairs6() {
  Field q;
  auto b = from_normals(
      {tri(q, 1, 0, 0), tri(q, 1, 0, -1), tri(q, 0, 1, 0), tri(q, 0, 1, -1), tri(q, 1, -1, -3), tri(q, 1, -1, -4)},
      q);
  expect(b, "parallel_pairs6", 6, {{2, 15}});
  return b;
}

namespace {

// Edges of the regular m-gon and its m mirrors, in coordinates (x, y sin(pi/m), z)
// so that everything lies in Q(2cos(pi/m)).
std::pair<std::vector<Triple>, Field> polygon_lines(int m) {
  auto [f, c] = real_cyclotomic_field(2 * m);
  Scalar half = f.from_rational(mpq_class(1, 2));
  Scalar sin2 = f.one() - c * c * half * half;  // sin^2(pi/m)
  std::vector<Triple> v;
  for (int k = 0; k < m; ++k) v.push_back(tri(cheb_d(2 * k + 1, c) * half, cheb_u(2 * k, c), -c * half));
  for (int j = 0; j < m; ++j) v.push_back(tri(-cheb_u(j - 1, c) * sin2, cheb_d(j, c) * half, f.zero()));
  return {v, f};
}

}  // namespace

Built polygonal(int two_m) {
  if (two_m < 6 || two_m % 2 || two_m > 60) throw Error(ErrorKind::OutOfRange, "polygonal needs even 6 <= 2m <= 60");
  int m = two_m / 2;
  auto [v, f] = polygon_lines(m);
  auto b = from_normals(v, f);
  if (m == 3)
    expect(b, "polygonal", 6, {{2, 3}, {3, 4}});
  else
    expect(b, "polygonal", two_m, {{2, m}, {3, std::int64_t(m) * (m - 1) / 2}, {m, 1}});
  return b;
}

Built polygonal_ext(int n) {
  if (n < 9 || n % 4 != 1 || n > 61) throw Error(ErrorKind::OutOfRange, "polygonal_ext needs n = 4k+1, 9 <= n <= 61");
  int k = (n - 1) / 4;
  auto [v, f] = polygon_lines(2 * k);
  v.push_back(make_triple(f, 0, 0, 1));
  auto b = from_normals(v, f);
  Expected e{{2, 3 * k}, {3, 2 * std::int64_t(k) * (k - 1)}, {4, k}};
  e[2 * k] += 1;
  expect(b, "polygonal_ext", n, e);
  return b;
}

namespace {

std::vector<ProjLine> orbit(const ProjLine& seed, const std::vector<Projectivity>& gens) {
  std::set<ProjLine> seen{seed};
  std::vector<ProjLine> order{seed}, frontier{seed};
  while (!frontier.empty()) {
    std::vector<ProjLine> next;
    for (auto& l : frontier)
      for (auto& g : gens) {
        ProjLine im = g.apply(l);
        if (seen.insert(im).second) {
          order.push_back(im);
          next.push_back(im);
        }
      }
    frontier = std::move(next);
  }
  return order;
}

Matrix3 mat(const Field& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  Matrix3 m;
  int i = 0;
  for (auto& r : rows) {
    int j = 0;
    for (auto e : r) m[i][j++] = f.parse_scalar(e);
    ++i;
  }
  return m;
}

}  // namespace

Built klein() {
  // Generators of PSL(2,7) conjugated so that four mirrors form the standard
  // frame; they act on line coordinates.  x^2 = -7.
  Field f = Field::parse("Q[x]/(x^2+7)");
  auto S = mat(f, {{"1", "-1/4+1/4*x", "-1/2"}, {"1/4+1/4*x", "-1", "0"}, {"1/2-1/2*x", "1/4+1/4*x", "-3/4+1/4*x"}});
  auto T = mat(f, {{"0", "1", "1/2-1/2*x"}, {"3/2-1/2*x", "1/2+1/2*x", "0"}, {"0", "0", "-1/2-1/2*x"}});
  auto R = mat(f, {{"1", "-1/4+1/4*x", "-3/4-1/4*x"}, {"0", "-1", "0"}, {"0", "0", "-1"}});
  std::vector<Projectivity> gens{Projectivity::from_line_matrix(S), Projectivity::from_line_matrix(T),
                                 Projectivity::from_line_matrix(R)};
  Built b;
  b.labelled = orbit(ProjLine(make_triple(f, 1, 0, 0)), gens);
  b.arrangement = Arrangement(f, b.labelled);
  expect(b, "klein", 21, {{3, 28}, {4, 21}});
  return b;
}

Built grunbaum_rigby() {
  // Three D7-orbits of heptagon side lines cos(k t) x + sin(k t) y = r, t = 2pi/7,
  // y rescaled by sin t.  c = 2cos(2pi/7).
  Field f = Field::parse("Q[x]/(x^3+x^2-2x-1)");
  Scalar c = f.generator(), one = f.one(), half = f.from_rational(mpq_class(1, 2));
  Scalar c3 = -c * c - c + one;  // 2cos(6pi/7)
  std::vector<Scalar> r{one, c - one, (c3 - one).inv()};
  std::vector<Triple> v;
  for (auto& rf : r)
    for (int k = 0; k < 7; ++k) v.push_back(tri(cheb_d(k, c) * half, cheb_u(k - 1, c), -rf));
  auto b = from_normals(v, f);
  expect(b, "grunbaum_rigby", 21, {{2, 63}, {3, 7}, {4, 21}});
  return b;
}

Built flashing3(const Scalar& t, bool allow_degenerate) {
  const Field& f = t.field();
  Built b;
  bool bad = in_set(t, {"0", "1", "-1", "1/2", "2"}) || (t * t - t + f.one()).is_zero();
  forbid(b, bad, allow_degenerate, "flashing3", "{0, 1, -1, 1/2, 2, t^2-t+1=0}", t);
  Scalar o = f.one(), z = f.zero();
  auto built = from_normals(
      {tri(z, o, z), tri(o, o, o), tri(o, t, o), tri(o, z, z), tri(z, z, o), tri(o, t * t - t + o, t)}, f);
  built.warnings = b.warnings;
  if (!bad) expect(built, "flashing3", 6, {{2, 12}, {3, 1}});
  return built;
}

Projectivity flashing_gamma(const Scalar& t) {
  const Field& f = t.field();
  Scalar o = f.one(), z = f.zero();
  Matrix3 g{{{-o, o, o - t}, {-t, t, o - t}, {-t, o, z}}};
  return Projectivity::from_line_matrix(g);
}

Built flashing4(const Scalar& t, bool full, bool allow_degenerate) {
  const Field& f = t.field();
  Built b;
  Scalar o = f.one(), z = f.zero(), two = f.from_int(2), h = f.from_rational(mpq_class(1, 2));
  bool bad = in_set(t, {"0", "1", "-1", "1/2", "2"}) || (two * t * t - two * t + o).is_zero();
  forbid(b, bad, allow_degenerate, "flashing4", "{0, 1, -1, 1/2, 2, 2t^2-2t+1=0}", t);
  Scalar t2 = t * t;
  std::vector<Triple> cols{
      tri(o, z, z),
      tri(z, z, o),
      tri(t2 - h * t, t2 - t + h, t2 - h * t),
      tri(two * t2, two * t2 - two * t + o, t2),
      tri(o, o, o),
      tri(z, o, t),
      tri(t, t - o, z),
      tri(two * t, two * t - o, t),  // printed as (2, 2t-1, t), which misses the 4-fold point
      tri(z, o, z),
      tri(two * t2 - t, two * t2 - f.from_int(3) * t + o, t2 - t),
      tri(t, t - h, t - h),
      tri(o, o, t),
  };
  if (!full) cols.resize(8);
  auto built = from_normals(cols, f);
  built.warnings = b.warnings;
  if (!bad) {
    if (full)
      expect(built, "flashing4", 12, {{2, 12}, {3, 16}, {4, 1}});
    else
      expect(built, "flashing4", 8, {{2, 22}, {4, 1}});
  }
  return built;
}

Built unassuming(const Scalar& t, bool allow_degenerate) {
  const Field& f = t.field();
  Built b;
  Scalar o = f.one(), z = f.zero(), h = f.from_rational(mpq_class(1, 2)), four = f.from_int(4);
  bool bad = in_set(t, {"0", "1", "-1"}) || (t * t - four * t - o).is_zero() || (t * t + four * t - o).is_zero();
  forbid(b, bad, allow_degenerate, "unassuming", "{0, 1, -1, -2+-sqrt5, 2+-sqrt5}", t);
  auto built = from_normals({tri(o, z, z), tri(z, o, z), tri(z, z, o), tri(o, o, o), tri(h * (o + t), h * (o - t), o),
                             tri(h * (o - t), h * (o + t), o)},
                            f);
  built.warnings = b.warnings;
  if (!bad) expect(built, "unassuming", 6, {{2, 15}});
  return built;
}

Built gv13(const Scalar& a, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::OutOfRange, "gv13 sign must be +1 or -1");
  const Field& f = a.field();
  if (a.is_zero()) throw Error(ErrorKind::DegenerateParameter, "gv13: a must be nonzero");
  Scalar o = f.one(), z = f.zero();
  Scalar b = f.from_int(sign) / a, a2 = a * a, b2 = b * b;
  auto built = from_normals({tri(o, z, z), tri(z, o, z), tri(z, z, o), tri(o, o, o), tri(o, o, a2), tri(o, a2, a2),
                             tri(o, b2, o), tri(o, a2, a), tri(o, a, a), tri(o, a, o), tri(o, b2, b), tri(o, b, o),
                             tri(o, b, b)},
                            f);
  if (built.arrangement.size() != 13)
    throw Error(ErrorKind::DegenerateParameter, "gv13: a = " + a.to_string() + " gives coincident lines");
  expect(built, "gv13", 13, {{2, 25}, {3, 11}, {5, 2}});
  return built;
}

std::vector<std::vector<int>> gv13_listed_flats() {
  std::vector<std::vector<int>> one = {{1, 5, 7},  {1, 8, 10}, {1, 11, 12}, {2, 5, 6},         {2, 8, 9},
                                       {2, 11, 13}, {3, 4, 5},  {3, 6, 8},   {3, 7, 11},        {3, 9, 10},
                                       {3, 12, 13}, {2, 4, 7, 10, 12},       {1, 4, 6, 9, 13}};
  for (auto& fl : one)
    for (auto& i : fl) --i;
  return one;
}

PointConfig pappus_points(const std::vector<mpq_class>& s, const std::vector<mpq_class>& u) {
  if (s.size() != 3 || u.size() != 3) throw Error(ErrorKind::OutOfRange, "pappus needs three s and three u values");
  Field q;
  std::vector<ProjPoint> pts;
  for (auto& v : s) pts.emplace_back(q.from_rational(v), q.zero(), q.one());
  for (auto& v : u) pts.emplace_back(q.zero(), q.from_rational(v), q.one());
  PointConfig P(q, pts);
  if (P.size() != 6) throw Error(ErrorKind::DegenerateParameter, "pappus points must be distinct");
  return P;
}

Built pappus(const std::vector<mpq_class>& s, const std::vector<mpq_class>& u) {
  Field q;
  auto P = pappus_points(s, u);
  std::vector<ProjPoint> p, r;
  for (auto& v : s) p.emplace_back(q.from_rational(v), q.zero(), q.one());
  for (auto& v : u) r.emplace_back(q.zero(), q.from_rational(v), q.one());
  for (auto& x : p)
    if (x[0].is_zero()) throw Error(ErrorKind::DegenerateParameter, "pappus points must avoid the origin");
  for (auto& x : r)
    if (x[1].is_zero()) throw Error(ErrorKind::DegenerateParameter, "pappus points must avoid the origin");
  Built b;
  b.labelled.push_back(ProjLine(make_triple(q, 0, 1, 0)));
  b.labelled.push_back(ProjLine(make_triple(q, 1, 0, 0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) b.labelled.push_back(join(p[i], r[j]));
  auto x = [&](int i, int j) { return meet(join(p[i], r[j]), join(p[j], r[i])); };
  b.labelled.push_back(join(x(0, 1), x(0, 2)));
  b.arrangement = Arrangement(q, b.labelled);
  expect(b, "pappus", 9, {{2, 9}, {3, 9}});
  return b;
}

Built hexagon_on_conic(const std::vector<mpq_class>& s) {
  if (s.size() != 6) throw Error(ErrorKind::OutOfRange, "hexagon_on_conic needs six parameters");
  Field q;
  std::vector<ProjPoint> p;
  for (auto& v : s) p.emplace_back(q.one(), q.from_rational(v), q.from_rational(v * v));
  if (PointConfig(q, p).size() != 6) throw Error(ErrorKind::DegenerateParameter, "hexagon vertices must be distinct");
  Built b;
  for (int i = 0; i < 6; ++i) b.labelled.push_back(join(p[i], p[(i + 1) % 6]));
  b.arrangement = Arrangement(q, b.labelled);
  expect(b, "hexagon_on_conic", 6, {{2, 15}});
  return b;
}

Built desargues9() {
  Field q;
  auto P = [&](long a, long b, long c) { return ProjPoint(make_triple(q, a, b, c)); };
  // perspective from the origin along y=0, x=0, x=y
  std::array<ProjPoint, 3> A{P(1, 0, 1), P(0, 2, 1), P(3, 3, 1)};
  std::array<ProjPoint, 3> B{P(-2, 0, 1), P(0, 5, 1), P(-1, -1, 1)};
  Built b;
  b.labelled = {ProjLine(make_triple(q, 0, 1, 0)), ProjLine(make_triple(q, 1, 0, 0)), ProjLine(make_triple(q, 1, -1, 0))};
  for (int i = 0; i < 3; ++i) b.labelled.push_back(join(A[(i + 1) % 3], A[(i + 2) % 3]));
  for (int i = 0; i < 3; ++i) b.labelled.push_back(join(B[(i + 1) % 3], B[(i + 2) % 3]));
  b.arrangement = Arrangement(q, b.labelled);
  expect(b, "desargues9", 9, {{2, 15}, {3, 7}});
  return b;
}

Built finite_plane(std::uint32_t q) {
  Field f(FieldSpec::finite_field(q));
  auto els = f.elements();
  Scalar o = f.one(), z = f.zero();
  std::vector<Triple> v;
  for (auto& a : els)
    for (auto& c : els) v.push_back(tri(o, a, c));
  for (auto& a : els) v.push_back(tri(z, o, a));
  v.push_back(tri(z, z, o));
  auto b = from_normals(v, f);
  std::int64_t n = std::int64_t(q) * q + q + 1;
  expect(b, "finite_plane", n, {{int(q) + 1, n}});
  return b;
}

Built reye() {
  // Cube vertices, centre and the three edge directions in P^3, projected to
  // the plane and dualized: 12 lines, 16 triple points.
  Field q;
  std::vector<std::array<long, 4>> pts;
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) pts.push_back({sx, sy, sz, 1});
  pts.push_back({0, 0, 0, 1});
  pts.push_back({1, 0, 0, 0});
  pts.push_back({0, 1, 0, 0});
  pts.push_back({0, 0, 1, 0});
  const long proj[][3][4] = {{{1, 0, 2, 3}, {0, 1, 5, -2}, {0, 0, 7, 11}},
                             {{2, 1, 0, 5}, {1, -3, 4, 1}, {3, 1, 1, 13}},
                             {{1, 4, 9, 2}, {7, 1, 3, 5}, {2, 6, 1, 17}}};
  for (auto& M : proj) {
    std::vector<Triple> v;
    for (auto& p : pts) {
      long c[3];
      for (int i = 0; i < 3; ++i) c[i] = M[i][0] * p[0] + M[i][1] * p[1] + M[i][2] * p[2] + M[i][3] * p[3];
      if (c[0] == 0 && c[1] == 0 && c[2] == 0) break;
      v.push_back(make_triple(q, c[0], c[1], c[2]));
    }
    if (v.size() != pts.size()) continue;
    auto b = from_normals(v, q);
    if (b.arrangement.size() != 12) continue;
    if (!(profile(b.arrangement) == profile_from_map(12, {{2, 18}, {3, 16}}))) continue;
    return b;
  }
  throw Error(ErrorKind::Unrealizable, "reye: no projection kept the configuration generic");
}

Built wiman() {
  throw Error(ErrorKind::NotApplicable, "wiman: coordinates not available in this build");
}

PointConfig generic_points_on_conic(int n, std::uint64_t seed, std::uint64_t* used_seed) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "need n >= 1");
  Field q;
  for (int round = 0; round < 32; ++round) {
    std::uint64_t s = seed + round;
    std::mt19937_64 rng(s);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 5);
    std::set<mpq_class> used;
    std::vector<ProjPoint> pts;
    int guard = 0;
    while (static_cast<int>(pts.size()) < n && guard++ < 10000) {
      mpq_class v(num(rng), den(rng));
      v.canonicalize();
      if (!used.insert(v).second) continue;
      pts.emplace_back(q.one(), q.from_rational(v), q.from_rational(v * v));
    }
    PointConfig P(q, pts);
    if (static_cast<int>(P.size()) != n) continue;
    if (n >= 4) {
      auto L = lines_operator(MultiplicitySelector::at_least_n(2), P);
      auto pr = profile(L);
      std::int64_t d = pr.d, rest = d * (d - 1) / 2 - std::int64_t(n) * (n - 1) * (n - 2) / 2;
      Expected e{{n - 1, n}};
      e[2] += rest;
      if (!(pr == profile_from_map(d, e))) continue;
    }
    if (used_seed) *used_seed = s;
    return P;
  }
  throw Error(ErrorKind::Unrealizable, "no generic conic points within 32 rounds from seed " + std::to_string(seed));
}

PointConfig regular_hexagon_points() {
  Field f = Field::parse("Q[x]/(x^2-3)");
  std::vector<ProjPoint> p;
  const char* xs[] = {"1", "1/2", "-1/2", "-1", "-1/2", "1/2"};
  const char* ys[] = {"0", "1/2*x", "1/2*x", "0", "-1/2*x", "-1/2*x"};
  for (int i = 0; i < 6; ++i) p.emplace_back(sc(f, xs[i]), sc(f, ys[i]), f.one());
  return PointConfig(f, p);
}

}  // namespace catalog

// ---------------------------------------------------------------- registry

namespace {

std::string canon_name(std::string s) {
  for (auto& c : s)
    if (c == '-') c = '_';
  return s;
}

struct Reader {
  const CatalogParams& p;
  std::set<std::string> used;

  const std::string* raw(const std::string& k) {
    used.insert(k);
    auto it = p.find(k);
    return it == p.end() ? nullptr : &it->second;
  }
  long integer(const std::string& k, std::optional<long> def) {
    auto r = raw(k);
    if (!r) {
      if (!def) throw Error(ErrorKind::Parse, "missing parameter '" + k + "'");
      return *def;
    }
    try {
      std::size_t pos = 0;
      long v = std::stol(*r, &pos);
      if (pos != r->size()) throw std::invalid_argument(k);
      return v;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "parameter '" + k + "' must be an integer, got '" + *r + "'");
    }
  }
  Field field(const char* def = "Q") {
    auto r = raw("field");
    return Field::parse(r ? *r : def);
  }
  Scalar scalar(const Field& f, const std::string& k, std::optional<std::string> def) {
    auto r = raw(k);
    if (!r && !def) throw Error(ErrorKind::Parse, "missing parameter '" + k + "'");
    return f.parse_scalar(r ? *r : *def);
  }
  bool flag(const std::string& k) {
    auto r = raw(k);
    return r && (*r == "1" || *r == "true" || *r == "yes" || r->empty());
  }
  std::vector<mpq_class> rationals(const std::string& k, std::vector<mpq_class> def) {
    auto r = raw(k);
    if (!r) return def;
    std::vector<mpq_class> out;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) return;
      try {
        mpq_class v(cur);
        v.canonicalize();
        out.push_back(v);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse, "bad rational '" + cur + "' in '" + k + "'");
      }
      cur.clear();
    };
    for (char c : *r) {
      if (c == ',')
        flush();
      else if (!std::isspace(static_cast<unsigned char>(c)))
        cur += c;
    }
    flush();
    return out;
  }
  void done(const std::string& entry) {
    for (auto& [k, v] : p)
      if (!used.count(k)) throw Error(ErrorKind::Parse, "entry '" + entry + "' takes no parameter '" + k + "'");
  }
};

using BuildFn = std::function<Built(Reader&)>;

struct Registered {
  CatalogEntryInfo info;
  BuildFn fn;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> r = {
      {{"trivial", "n (default 4)", "Q", "t_n=1", "pencil of n concurrent lines"},
       [](Reader& p) { return catalog::trivial(int(p.integer("n", 4))); }},
      {{"quasi_trivial", "n (default 4)", "Q", "t_{n-1}=1 t2=n-1", "pencil of n-1 lines plus one transversal"},
       [](Reader& p) { return catalog::quasi_trivial(int(p.integer("n", 4))); }},
      {{"generic", "n (default 5), seed (default 1)", "Q", "t2=C(n,2)",
        "n lines in general position from a seeded draw"},
       [](Reader& p) { return catalog::generic(int(p.integer("n", 5)), std::uint64_t(p.integer("seed", 1))); }},
      {{"complete_quadrilateral", "field (default Q)", "Q", "t2=3 t3=4",
        "six lines through four points in general position"},
       [](Reader& p) { return catalog::complete_quadrilateral(p.field()); }},
      {{"ceva", "n (default 3)", "Q[x]/(Phi_n)", "t3=n^2 t_n=3", "(x^n-y^n)(x^n-z^n)(y^n-z^n)=0"},
       [](Reader& p) { return catalog::ceva(int(p.integer("n", 3))); }},
      {{"ceva_ext", "n (default 3)", "Q[x]/(Phi_n)", "t2=3n t3=n^2 t_{n+2}=3", "Ceva(n) plus xyz=0"},
       [](Reader& p) { return catalog::ceva_ext(int(p.integer("n", 3))); }},
      {{"dual_hesse", "", "Q[x]/(x^2+x+1)", "t3=12", "the nine lines of the dual Hesse arrangement"},
       [](Reader&) { return catalog::dual_hesse(); }},
      {{"maclane", "", "Q[x]/(x^2+x+1)", "t2=4 t3=8", "dual Hesse minus one line (Moebius-Kantor 8_3)"},
       [](Reader&) { return catalog::maclane(); }},
      {{"hesse", "", "Q[x]/(x^2+x+1)", "t2=12 t4=9", "L{>=3;>=2} of the MacLane arrangement"},
       [](Reader&) { return catalog::hesse(); }},
      {{"grid6", "", "Q", "t2=9 t3=2", "x, x+-z, y, y+-z"}, [](Reader&) { return catalog::grid6(); }},
      {{"parallel_pairs6", "", "Q", "t2=15", "three pairs of parallel lines"},
       [](Reader&) { return catalog::parallel_pairs6(); }},
      {{"polygonal", "n = 2m (default 10)", "Q(2cos(pi/m))", "t2=m t3=m(m-1)/2 t_m=1",
        "edges and mirrors of a regular m-gon"},
       [](Reader& p) { return catalog::polygonal(int(p.integer("n", 10))); }},
      {{"polygonal_ext", "n = 4k+1 (default 13)", "Q(2cos(pi/2k))", "t2=3k t3=2k(k-1) t4=k t_2k=1",
        "A1(4k) plus the line at infinity z=0"},
       [](Reader& p) { return catalog::polygonal_ext(int(p.integer("n", 13))); }},
      {{"klein", "", "Q[x]/(x^2+7)", "t3=28 t4=21", "mirrors of the order-168 group"},
       [](Reader&) { return catalog::klein(); }},
      {{"grunbaum_rigby", "", "Q[x]/(x^3+x^2-2x-1)", "t2=63 t3=7 t4=21", "the real 21_4 configuration"},
       [](Reader&) { return catalog::grunbaum_rigby(); }},
      {{"wiman", "", "Q[x]/(Phi_15)", "t3=120 t4=45 t5=36", "mirrors of the Valentiner group", true},
       [](Reader&) { return catalog::wiman(); }},
      {{"flashing3", "t (default 3), field (default Q), allow_degenerate", "field of t", "t2=12 t3=1",
        "six-line flashing arrangement F0(t)"},
       [](Reader& p) {
         Field f = p.field();
         auto t = p.scalar(f, "t", "3");
         return catalog::flashing3(t, p.flag("allow_degenerate"));
       }},
      {{"flashing4", "t (default 3), part = c0|c1|all (default c0), field, allow_degenerate", "field of t",
        "c0: t2=22 t4=1; all: t2=12 t3=16 t4=1", "the 12 normals of the 8-line flashing pair"},
       [](Reader& p) {
         Field f = p.field();
         auto t = p.scalar(f, "t", "3");
         auto r = p.raw("part");
         std::string part = r ? *r : "c0";
         bool deg = p.flag("allow_degenerate");
         if (part == "c0") return catalog::flashing4(t, false, deg);
         if (part == "all") return catalog::flashing4(t, true, deg);
         if (part == "c1") {
           auto all = catalog::flashing4(t, true, deg);
           std::vector<Triple> v;
           for (std::size_t i = 4; i < 12; ++i) v.push_back(all.labelled[i].coords());
           auto b = catalog::from_normals(v, f);
           b.warnings = all.warnings;
           return b;
         }
         throw Error(ErrorKind::Parse, "flashing4 part must be c0, c1 or all");
       }},
      {{"unassuming", "t (default 3), field (default Q), allow_degenerate", "field of t", "t2=15",
        "the six columns of M_t"},
       [](Reader& p) {
         Field f = p.field();
         auto t = p.scalar(f, "t", "3");
         return catalog::unassuming(t, p.flag("allow_degenerate"));
       }},
      {{"gv13", "a (default 2), sign = + or - (default +), field (default Q)", "Q", "t2=25 t3=11 t5=2",
        "13 lines with b = sign/a"},
       [](Reader& p) {
         Field f = p.field();
         auto a = p.scalar(f, "a", "2");
         auto r = p.raw("sign");
         std::string s = r ? *r : "+";
         if (s != "+" && s != "-" && s != "1" && s != "-1") throw Error(ErrorKind::Parse, "sign must be + or -");
         return catalog::gv13(a, s == "-" || s == "-1" ? -1 : 1);
       }},
      {{"pappus", "s = three rationals (default 1,2,4), u = three rationals (default 1,3,-2)", "Q", "t2=9 t3=9",
        "Pappus 9_3 from points (s:0:1) and (0:u:1)"},
       [](Reader& p) { return catalog::pappus(p.rationals("s", {1, 2, 4}), p.rationals("u", {1, 3, -2})); }},
      {{"hexagon_on_conic", "s = six rationals (default 0,1,3,7,-2,-5)", "Q", "t2=15",
        "hexagon with vertices (1:s:s^2)"},
       [](Reader& p) { return catalog::hexagon_on_conic(p.rationals("s", {0, 1, 3, 7, -2, -5})); }},
      {{"desargues9", "", "Q", "t2=15 t3=7", "two triangles in perspective from a point"},
       [](Reader&) { return catalog::desargues9(); }},
      {{"finite_plane", "q (default 2)", "GF(q)", "t_{q+1}=q^2+q+1", "all lines of P^2(F_q)"},
       [](Reader& p) { return catalog::finite_plane(std::uint32_t(p.integer("q", 2))); }},
      {{"reye", "", "Q", "t2=18 t3=16", "dual of a generic projection of the Reye configuration"},
       [](Reader&) { return catalog::reye(); }},
  };
  return r;
}

}  // namespace

const std::vector<CatalogEntryInfo>& catalog_entries() {
  static const std::vector<CatalogEntryInfo> v = [] {
    std::vector<CatalogEntryInfo> out;
    for (auto& r : registry()) out.push_back(r.info);
    return out;
  }();
  return v;
}

const CatalogEntryInfo& catalog_entry(const std::string& name) {
  std::string n = canon_name(name);
  for (auto& r : registry())
    if (r.info.name == n) return r.info;
  throw Error(ErrorKind::Parse, "unknown catalog entry '" + name + "'");
}

Built build(const std::string& name, const CatalogParams& params) {
  std::string n = canon_name(name);
  for (auto& r : registry())
    if (r.info.name == n) {
      Reader rd{params, {}};
      Built b = r.fn(rd);
      rd.done(n);
      return b;
    }
  throw Error(ErrorKind::Parse, "unknown catalog entry '" + name + "'");
}

}  // namespace lineops
