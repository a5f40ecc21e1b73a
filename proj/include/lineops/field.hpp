#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lineops/poly.hpp"

namespace lineops {

enum class FieldKind { Rationals, NumberField, PrimeField, PrimePowerField };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  // Monic, lowest degree first.  Empty for Q and GF(p).  For finite fields
  // the entries are integers in [0, p).
  QPoly min_poly;
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec number_field(QPoly f);
  static FieldSpec prime_field(std::uint32_t p);
  static FieldSpec prime_power_field(std::uint32_t p, QPoly f);
  // GF(q) with the smallest irreducible polynomial, or GF(p).
  static FieldSpec finite_field(std::uint32_t q);

  // Q, Q[x]/(x^2+x+1), GF(7), GF(4;x^2+x+1), GF(4)
  static FieldSpec parse(std::string_view text);
  std::string to_string() const;
  int degree() const;

  bool operator==(const FieldSpec& o) const;
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

class Scalar;

namespace detail {
struct FieldImpl;
}

// Shared immutable handle.  Two handles built from equal specs are
// interchangeable.
class Field {
 public:
  Field();  // Q
  explicit Field(const FieldSpec& spec);
  static Field parse(std::string_view text) { return Field(FieldSpec::parse(text)); }
  static Field rationals();

  const FieldSpec& spec() const;
  FieldKind kind() const { return spec().kind; }
  int degree() const;
  std::uint32_t characteristic() const { return spec().characteristic; }
  bool is_finite() const { return characteristic() != 0; }
  std::uint64_t order() const;  // finite fields only
  std::string to_string() const { return spec().to_string(); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& v) const;
  Scalar generator() const;
  Scalar from_poly(const QPoly& coeffs) const;  // reduced modulo min_poly
  Scalar parse_scalar(std::string_view text) const;
  std::vector<Scalar> elements() const;  // finite fields only, canonical order

  // Real roots of min_poly in increasing order (a single 0.0 placeholder
  // for Q so that root_index 0 works there).
  const std::vector<double>& real_roots() const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

  const detail::FieldImpl& impl() const { return *impl_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> p) : impl_(std::move(p)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;
  friend class Scalar;
};

class Scalar {
 public:
  Scalar();  // rational zero
  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;
  Scalar operator+(const Scalar& b) const;
  Scalar operator-(const Scalar& b) const;
  Scalar operator*(const Scalar& b) const;
  Scalar operator/(const Scalar& b) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  Scalar inv() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& b) const;
  bool operator!=(const Scalar& b) const { return !(*this == b); }
  // Canonical total order on representatives (not a field order).
  int compare(const Scalar& b) const;
  bool operator<(const Scalar& b) const { return compare(b) < 0; }
  std::size_t hash() const;

  std::string to_string() const;
  double real_embedding(int root_index) const;

  bool is_rational() const;  // lies in the prime field
  mpq_class as_rational() const;  // characteristic 0, rational values only
  const QPoly& coeffs() const { return q_; }  // characteristic 0
  const std::vector<std::uint32_t>& residues() const { return r_; }  // characteristic p

 private:
  Scalar(Field f, QPoly q, std::vector<std::uint32_t> r)
      : field_(std::move(f)), q_(std::move(q)), r_(std::move(r)) {}
  void check_same(const Scalar& b) const;
  Field field_;
  QPoly q_;
  std::vector<std::uint32_t> r_;
  friend class Field;
};

std::size_t hash_mpz(const mpz_class& z);
std::size_t hash_mpq(const mpq_class& q);

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace lineops

template <>
struct std::hash<lineops::Scalar> {
  std::size_t operator()(const lineops::Scalar& s) const { return s.hash(); }
};
