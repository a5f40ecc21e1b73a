#include "lineops/projective.hpp"

#include <algorithm>

#include "lineops/error.hpp"

namespace lineops {

bool triple_is_zero(const Triple& t) { return t[0].is_zero() && t[1].is_zero() && t[2].is_zero(); }

void normalize_triple(Triple& t) {
  if (t[0].field() != t[1].field() || t[0].field() != t[2].field())
    throw Error(ErrorKind::FieldMismatch, "coordinates from different fields");
  int lead = -1;
  for (int i = 0; i < 3; ++i)
    if (!t[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) throw Error(ErrorKind::Degenerate, "zero coordinate triple");
  if (t[lead].is_one()) return;
  Scalar inv = t[lead].inv();
  for (int i = lead + 1; i < 3; ++i)
    if (!t[i].is_zero()) t[i] = t[i] * inv;
  t[lead] = t[lead].field().one();
}

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Triple make_triple(const Field& f, long a, long b, long c) { return {f.from_int(a), f.from_int(b), f.from_int(c)}; }

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Error(ErrorKind::Degenerate, "join of identical points");
  return ProjLine(cross(p.coords(), q.coords()));
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw Error(ErrorKind::Degenerate, "meet of identical lines");
  return ProjPoint(cross(l.coords(), m.coords()));
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_zero();
}

ProjLine dualize(const ProjPoint& p) { return ProjLine::trusted(p.coords()); }
ProjPoint dualize(const ProjLine& l) { return ProjPoint::trusted(l.coords()); }

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return det(matrix_from_columns(a.coords(), b.coords(), c.coords())).is_zero();
}

bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  return det(matrix_from_columns(a.coords(), b.coords(), c.coords())).is_zero();
}

// ---- matrices

Matrix3 identity_matrix(const Field& f) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = i == j ? f.one() : f.zero();
  return m;
}

Matrix3 matmul(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

Matrix3 transpose(const Matrix3& a) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

Scalar det(const Matrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Matrix3 inverse(const Matrix3& a) {
  Scalar d = det(a);
  if (d.is_zero()) throw Error(ErrorKind::Degenerate, "singular matrix");
  Scalar di = d.inv();
  Matrix3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // cofactor of a[j][i]
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) * di;
    }
  return r;
}

Triple apply(const Matrix3& m, const Triple& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2], m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

Matrix3 matrix_from_columns(const Triple& a, const Triple& b, const Triple& c) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i) {
    m[i][0] = a[i];
    m[i][1] = b[i];
    m[i][2] = c[i];
  }
  return m;
}

std::vector<std::vector<Scalar>> kernel(std::vector<std::vector<Scalar>> rows, std::size_t cols, const Field& f) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = rows[r][c].inv();
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar fac = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = rows[i][k] - fac * rows[r][k];
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    std::vector<Scalar> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---- projectivities

Projectivity Projectivity::from_point_matrix(const Matrix3& m) { return Projectivity(m, transpose(lineops::inverse(m))); }

Projectivity Projectivity::from_line_matrix(const Matrix3& n) { return Projectivity(transpose(lineops::inverse(n)), n); }

ProjPoint Projectivity::apply(const ProjPoint& p) const { return ProjPoint(lineops::apply(m_, p.coords())); }
ProjLine Projectivity::apply(const ProjLine& l) const { return ProjLine(lineops::apply(n_, l.coords())); }

Projectivity Projectivity::compose(const Projectivity& after) const {
  return Projectivity(matmul(after.m_, m_), matmul(after.n_, n_));
}

Projectivity Projectivity::inverse() const { return Projectivity(lineops::inverse(m_), lineops::inverse(n_)); }

bool matrices_proportional(const Matrix3& a, const Matrix3& b) {
  // a = λ b with λ != 0: all 2x2 "cross ratios" a_ij b_kl = a_kl b_ij
  std::vector<Scalar> va, vb;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      va.push_back(a[i][j]);
      vb.push_back(b[i][j]);
    }
  int k = -1;
  for (int i = 0; i < 9; ++i)
    if (!vb[i].is_zero()) {
      k = i;
      break;
    }
  if (k < 0 || va[k].is_zero()) return false;
  Scalar lambda = va[k] / vb[k];
  for (int i = 0; i < 9; ++i)
    if (va[i] != lambda * vb[i]) return false;
  return true;
}

bool Projectivity::operator==(const Projectivity& o) const { return matrices_proportional(m_, o.m_); }

bool Projectivity::is_identity() const { return matrices_proportional(m_, identity_matrix(m_[0][0].field())); }

namespace {

// Matrix sending e1,e2,e3,(1,1,1) to the four given vectors (up to scale).
Matrix3 frame_matrix(const std::array<Triple, 4>& v) {
  Matrix3 A = matrix_from_columns(v[0], v[1], v[2]);
  if (det(A).is_zero()) throw Error(ErrorKind::Degenerate, "frame: three of the four elements are dependent");
  Triple lam = lineops::apply(inverse(A), v[3]);
  for (auto& l : lam)
    if (l.is_zero()) throw Error(ErrorKind::Degenerate, "frame: three of the four elements are dependent");
  Matrix3 S = A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) S[i][j] = A[i][j] * lam[j];
  return S;
}

template <class H>
Matrix3 frame_map(const std::array<H, 4>& src, const std::array<H, 4>& dst) {
  std::array<Triple, 4> s, d;
  for (int i = 0; i < 4; ++i) {
    s[i] = src[i].coords();
    d[i] = dst[i].coords();
  }
  return matmul(frame_matrix(d), inverse(frame_matrix(s)));
}

}  // namespace

Projectivity projectivity_from_line_frames(const std::array<ProjLine, 4>& src, const std::array<ProjLine, 4>& dst) {
  return Projectivity::from_line_matrix(frame_map(src, dst));
}

Projectivity projectivity_from_point_frames(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst) {
  return Projectivity::from_point_matrix(frame_map(src, dst));
}

// ---- conics

Conic::Conic(std::array<Scalar, 6> c) : c_(std::move(c)) {
  int lead = -1;
  for (int i = 0; i < 6; ++i)
    if (!c_[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead < 0) throw Error(ErrorKind::Degenerate, "zero conic");
  Scalar inv = c_[lead].inv();
  for (auto& x : c_) x = x * inv;
}

namespace {
std::vector<Scalar> monomials(const ProjPoint& p) {
  const Scalar &x = p[0], &y = p[1], &z = p[2];
  return {x * x, y * y, z * z, x * y, x * z, y * z};
}
}  // namespace

Conic Conic::through(const std::array<ProjPoint, 5>& pts) {
  const Field& f = pts[0].field();
  std::vector<std::vector<Scalar>> rows;
  for (auto& p : pts) rows.push_back(monomials(p));
  auto ker = kernel(rows, 6, f);
  if (ker.size() != 1) throw Error(ErrorKind::Degenerate, "conic through the five points is not unique");
  std::array<Scalar, 6> c;
  std::copy(ker[0].begin(), ker[0].end(), c.begin());
  return Conic(c);
}

bool Conic::contains(const ProjPoint& p) const {
  auto m = monomials(p);
  Scalar s = p.field().zero();
  for (int i = 0; i < 6; ++i) s = s + c_[i] * m[i];
  return s.is_zero();
}

Scalar Conic::discriminant() const {
  const auto& [a, b, c, d, e, f] = c_;
  Scalar two = a.field().from_int(2);
  Matrix3 m{{{two * a, d, e}, {d, two * b, f}, {e, f, two * c}}};
  return det(m);
}

bool Conic::is_irreducible() const { return !discriminant().is_zero(); }

bool Conic::operator==(const Conic& o) const {
  for (int i = 0; i < 6; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool Conic::operator<(const Conic& o) const {
  for (int i = 0; i < 6; ++i)
    if (int r = c_[i].compare(o.c_[i]); r != 0) return r < 0;
  return false;
}

std::string Conic::to_string() const {
  static const char* mon[6] = {"x^2", "y^2", "z^2", "xy", "xz", "yz"};
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string() + ")" + mon[i];
  }
  return s;
}

}  // namespace lineops
