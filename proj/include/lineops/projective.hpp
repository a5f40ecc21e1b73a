#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lineops/field.hpp"

namespace lineops {

using Triple = std::array<Scalar, 3>;
using Matrix3 = std::array<std::array<Scalar, 3>, 3>;

struct PointTag {};
struct LineTag {};

// A nonzero triple scaled so that its leftmost nonzero entry is 1.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(const Scalar& a, const Scalar& b, const Scalar& c);
  explicit Homogeneous(const Triple& t) : Homogeneous(t[0], t[1], t[2]) {}
  // Caller guarantees t is already normalized.
  static Homogeneous trusted(Triple t) { return Homogeneous(std::move(t), 0); }

  const Scalar& operator[](int i) const { return c_[i]; }
  const Triple& coords() const { return c_; }
  const Field& field() const { return c_[0].field(); }

  int compare(const Homogeneous& o) const {
    for (int i = 0; i < 3; ++i)
      if (int r = c_[i].compare(o.c_[i]); r != 0) return r;
    return 0;
  }
  bool operator==(const Homogeneous& o) const { return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2]; }
  bool operator!=(const Homogeneous& o) const { return !(*this == o); }
  bool operator<(const Homogeneous& o) const { return compare(o) < 0; }
  std::size_t hash() const {
    std::size_t h = 0;
    for (auto& s : c_) hash_combine(h, s.hash());
    return h;
  }
  std::string to_string() const {
    return "(" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + ")";
  }

 private:
  Homogeneous(Triple t, int) : c_(std::move(t)) {}
  Triple c_;
};

using ProjPoint = Homogeneous<PointTag>;
using ProjLine = Homogeneous<LineTag>;

// Scales t in place; throws Degenerate on the zero triple.
void normalize_triple(Triple& t);
Triple cross(const Triple& a, const Triple& b);
bool triple_is_zero(const Triple& t);

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);
bool incident(const ProjPoint& p, const ProjLine& l);
ProjLine dualize(const ProjPoint& p);
ProjPoint dualize(const ProjLine& l);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c);

Triple make_triple(const Field& f, long a, long b, long c);

template <class Tag>
Homogeneous<Tag>::Homogeneous(const Scalar& a, const Scalar& b, const Scalar& c) : c_{a, b, c} {
  normalize_triple(c_);
}

// ---- matrices

Matrix3 identity_matrix(const Field& f);
Matrix3 matmul(const Matrix3& a, const Matrix3& b);
Matrix3 transpose(const Matrix3& a);
Scalar det(const Matrix3& a);
Matrix3 inverse(const Matrix3& a);  // throws Degenerate if singular
Triple apply(const Matrix3& m, const Triple& v);
Matrix3 matrix_from_columns(const Triple& a, const Triple& b, const Triple& c);
// Kernel of a rows x cols matrix by exact Gaussian elimination.
std::vector<std::vector<Scalar>> kernel(std::vector<std::vector<Scalar>> rows, std::size_t cols, const Field& f);

class Projectivity {
 public:
  static Projectivity from_point_matrix(const Matrix3& m);
  // N acts on line coordinates directly (l -> N l).
  static Projectivity from_line_matrix(const Matrix3& n);
  static Projectivity identity(const Field& f) { return from_point_matrix(identity_matrix(f)); }

  ProjPoint apply(const ProjPoint& p) const;
  ProjLine apply(const ProjLine& l) const;
  Projectivity compose(const Projectivity& after) const;  // after ∘ this
  Projectivity inverse() const;
  const Matrix3& point_matrix() const { return m_; }
  const Matrix3& line_matrix() const { return n_; }
  // Equality in PGL3 (up to a nonzero scalar).
  bool operator==(const Projectivity& o) const;
  bool is_identity() const;

 private:
  Projectivity(Matrix3 m, Matrix3 n) : m_(std::move(m)), n_(std::move(n)) {}
  Matrix3 m_;  // point action
  Matrix3 n_;  // line action = m^{-T}
};

bool matrices_proportional(const Matrix3& a, const Matrix3& b);

// src and dst: 4 lines each, no three concurrent.
Projectivity projectivity_from_line_frames(const std::array<ProjLine, 4>& src, const std::array<ProjLine, 4>& dst);
Projectivity projectivity_from_point_frames(const std::array<ProjPoint, 4>& src, const std::array<ProjPoint, 4>& dst);

// a x^2 + b y^2 + c z^2 + d xy + e xz + f yz
class Conic {
 public:
  explicit Conic(std::array<Scalar, 6> coeffs);  // normalizes
  static Conic through(const std::array<ProjPoint, 5>& pts);
  const std::array<Scalar, 6>& coeffs() const { return c_; }
  bool contains(const ProjPoint& p) const;
  bool is_irreducible() const;
  Scalar discriminant() const;  // det [[2a,d,e],[d,2b,f],[e,f,2c]]
  bool operator==(const Conic& o) const;
  bool operator<(const Conic& o) const;
  std::string to_string() const;

 private:
  std::array<Scalar, 6> c_;
};

struct RichConic {
  Conic conic;
  std::vector<int> points;  // indices into the configuration
  bool irreducible;
};

}  // namespace lineops

template <class Tag>
struct std::hash<lineops::Homogeneous<Tag>> {
  std::size_t operator()(const lineops::Homogeneous<Tag>& h) const { return h.hash(); }
};
