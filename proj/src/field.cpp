#include "lineops/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <mutex>

#include "lineops/error.hpp"

namespace lineops {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidField: return "invalid-field";
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::DegenerateParameter: return "degenerate-parameter";
    case ErrorKind::ProfileMismatch: return "profile-mismatch";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NotApplicable: return "not-applicable";
    case ErrorKind::NoRealRoot: return "no-real-root";
    case ErrorKind::Unrealizable: return "unrealizable";
  }
  return "error";
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_p(const mpq_class& v, std::uint32_t p) {
  mpz_class P(p);
  mpz_class num = v.get_num() % P;
  mpz_class den = v.get_den() % P;
  if (num < 0) num += P;
  if (den < 0) den += P;
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "denominator divisible by the characteristic");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), P.get_mpz_t());
  mpz_class r = (num * inv) % P;
  return static_cast<std::uint32_t>(r.get_ui());
}

using FpPoly = std::vector<std::uint32_t>;

// remainder of a modulo a monic g over F_p, in place
void fp_reduce(FpPoly& a, const FpPoly& g, std::uint32_t p) {
  int dg = static_cast<int>(g.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dg; --i) {
    std::uint64_t c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) {
      std::uint64_t sub = c * g[j] % p;
      a[i - dg + j] = static_cast<std::uint32_t>((a[i - dg + j] + p - sub) % p);
    }
  }
  a.resize(std::min<size_t>(a.size(), dg));
}

bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      FpPoly g(d + 1);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      FpPoly r = f;
      fp_reduce(r, g, p);
      if (std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

QPoly to_qpoly(const FpPoly& f) {
  QPoly q;
  for (auto c : f) q.push_back(mpq_class(c));
  return q;
}

FpPoly to_fppoly(const QPoly& q, std::uint32_t p) {
  FpPoly f;
  for (auto& c : q) f.push_back(mod_p(c, p));
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace

FieldSpec FieldSpec::number_field(QPoly f) {
  poly::trim(f);
  FieldSpec s;
  s.kind = FieldKind::NumberField;
  s.min_poly = std::move(f);
  return s;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  FieldSpec s;
  s.kind = FieldKind::PrimeField;
  s.characteristic = p;
  return s;
}

FieldSpec FieldSpec::prime_power_field(std::uint32_t p, QPoly f) {
  FieldSpec s;
  s.kind = FieldKind::PrimePowerField;
  s.characteristic = p;
  if (p >= 2) {
    FpPoly g = to_fppoly(f, p);
    s.min_poly = to_qpoly(g);
  } else {
    s.min_poly = std::move(f);
  }
  return s;
}

FieldSpec FieldSpec::finite_field(std::uint32_t q) {
  if (q < 2) throw Error(ErrorKind::InvalidField, "field order must be at least 2");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int k = 0;
  std::uint64_t t = q;
  while (t % p == 0) {
    t /= p;
    ++k;
  }
  if (t != 1) throw Error(ErrorKind::InvalidField, "GF(" + std::to_string(q) + "): order is not a prime power");
  if (k == 1) return prime_field(p);
  if (q > 64) throw Error(ErrorKind::InvalidField, "GF(p^k) with k >= 2 is supported only up to order 64");
  for (std::uint64_t code = 0; code < q; ++code) {
    FpPoly g(k + 1);
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i) {
      g[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    g[k] = 1;
    if (g[0] != 0 && fp_irreducible(g, p)) return prime_power_field(p, to_qpoly(g));
  }
  throw Error(ErrorKind::InvalidField, "no irreducible polynomial found");  // unreachable
}

int FieldSpec::degree() const {
  if (kind == FieldKind::Rationals || kind == FieldKind::PrimeField) return 1;
  return std::max(1, poly::degree(min_poly));
}

bool FieldSpec::operator==(const FieldSpec& o) const {
  if (kind != o.kind || characteristic != o.characteristic) return false;
  QPoly a = min_poly, b = o.min_poly;
  poly::trim(a);
  poly::trim(b);
  return a == b;
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::NumberField: return "Q[x]/(" + poly::format(min_poly) + ")";
    case FieldKind::PrimeField: return "GF(" + std::to_string(characteristic) + ")";
    case FieldKind::PrimePowerField: {
      std::uint64_t q = 1;
      for (int i = 0; i < degree(); ++i) q *= characteristic;
      return "GF(" + std::to_string(q) + ";" + poly::format(min_poly) + ")";
    }
  }
  return "?";
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&](const std::string& why) -> Error {
    return Error(ErrorKind::Parse, "bad field spec '" + std::string(text) + "': " + why);
  };
  if (s == "Q" || s == "QQ") return rationals();
  if (s.rfind("Q[x]/(", 0) == 0) {
    if (s.back() != ')') throw bad("missing ')'");
    return number_field(poly::parse(s.substr(6, s.size() - 7)));
  }
  if (s.rfind("GF(", 0) == 0) {
    if (s.back() != ')') throw bad("missing ')'");
    std::string body = s.substr(3, s.size() - 4);
    auto semi = body.find(';');
    std::string qs = body.substr(0, semi);
    if (qs.empty() || !std::all_of(qs.begin(), qs.end(), ::isdigit)) throw bad("order must be an integer");
    std::uint64_t q = std::stoull(qs);
    if (q > 0xffffffffULL) throw bad("order too large");
    if (semi == std::string::npos) return finite_field(static_cast<std::uint32_t>(q));
    QPoly f = poly::parse(body.substr(semi + 1));
    std::uint32_t p = 0;
    for (std::uint64_t d = 2; d <= q; ++d)
      if (q % d == 0) {
        p = static_cast<std::uint32_t>(d);
        break;
      }
    if (p == 0) throw bad("order must be at least 2");
    FieldSpec out = prime_power_field(p, f);
    std::uint64_t order = 1;
    for (int i = 0; i < out.degree(); ++i) order *= p;
    if (order != q) throw bad("polynomial degree does not match the order");
    return out;
  }
  throw bad("expected Q, Q[x]/(f), GF(q) or GF(q;f)");
}

namespace detail {

struct FieldImpl {
  FieldSpec spec;
  int deg = 1;
  std::vector<double> roots;
  // finite fields
  std::uint32_t p = 0;
  std::uint64_t q = 0;
  FpPoly modulus;
  std::vector<int> log_table, exp_table;  // by code, for p^k with k >= 2

  std::uint64_t code(const std::vector<std::uint32_t>& r) const {
    std::uint64_t c = 0;
    for (int i = deg - 1; i >= 0; --i) c = c * p + r[i];
    return c;
  }
  std::vector<std::uint32_t> decode(std::uint64_t c) const {
    std::vector<std::uint32_t> r(deg);
    for (int i = 0; i < deg; ++i) {
      r[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    return r;
  }
};

}  // namespace detail

namespace {

std::shared_ptr<const detail::FieldImpl> make_impl(const FieldSpec& spec_in) {
  auto impl = std::make_shared<detail::FieldImpl>();
  FieldSpec spec = spec_in;
  poly::trim(spec.min_poly);
  switch (spec.kind) {
    case FieldKind::Rationals:
      spec.min_poly.clear();
      spec.characteristic = 0;
      impl->roots = {0.0};
      break;
    case FieldKind::NumberField: {
      const QPoly& f = spec.min_poly;
      int d = poly::degree(f);
      if (spec.characteristic != 0) throw Error(ErrorKind::InvalidField, "number fields have characteristic 0");
      if (d < 2) throw Error(ErrorKind::InvalidField, "min_poly must have degree >= 2 (use Q for degree 1)");
      if (!poly::is_monic(f)) throw Error(ErrorKind::InvalidField, "min_poly must be monic");
      if (poly::degree(poly::monic_gcd(f, poly::derivative(f))) > 0)
        throw Error(ErrorKind::InvalidField, "min_poly is not squarefree");
      if (d <= 4 && !poly::rational_roots(f).empty())
        throw Error(ErrorKind::InvalidField, "min_poly has a rational root");
      impl->deg = d;
      impl->roots = poly::real_roots(f);
      break;
    }
    case FieldKind::PrimeField:
      if (!is_prime(spec.characteristic))
        throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(spec.characteristic) + " is not prime");
      spec.min_poly.clear();
      impl->p = spec.characteristic;
      impl->q = spec.characteristic;
      break;
    case FieldKind::PrimePowerField: {
      std::uint32_t p = spec.characteristic;
      if (!is_prime(p)) throw Error(ErrorKind::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
      FpPoly f = to_fppoly(spec.min_poly, p);
      int k = static_cast<int>(f.size()) - 1;
      if (k < 2) throw Error(ErrorKind::InvalidField, "GF(p^k) needs a min_poly of degree >= 2");
      if (f.back() != 1 || poly::degree(spec.min_poly) != k || spec.min_poly.back() != 1)
        throw Error(ErrorKind::InvalidField, "min_poly must be monic");
      std::uint64_t q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      if (q > 64) throw Error(ErrorKind::InvalidField, "GF(p^k) with k >= 2 is supported only up to order 64");
      if (!fp_irreducible(f, p)) throw Error(ErrorKind::InvalidField, "min_poly is reducible over GF(" + std::to_string(p) + ")");
      spec.min_poly = to_qpoly(f);
      impl->p = p;
      impl->q = q;
      impl->deg = k;
      impl->modulus = f;
      // discrete log tables from a primitive element
      auto mulmod = [&](const FpPoly& a, const FpPoly& b) {
        FpPoly r(2 * k, 0);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        fp_reduce(r, f, p);
        r.resize(k, 0);
        return r;
      };
      for (std::uint64_t g = 2; g < q; ++g) {
        std::vector<int> exp_t, log_t(q, -1);
        FpPoly cur = impl->decode(1), gen = impl->decode(g);
        bool ok = true;
        for (std::uint64_t e = 0; e + 1 < q; ++e) {
          std::uint64_t c = impl->code(cur);
          if (log_t[c] != -1) {
            ok = false;
            break;
          }
          log_t[c] = static_cast<int>(e);
          exp_t.push_back(static_cast<int>(c));
          cur = mulmod(cur, gen);
        }
        if (ok) {
          impl->exp_table = std::move(exp_t);
          impl->log_table = std::move(log_t);
          break;
        }
      }
      break;
    }
  }
  impl->spec = spec;
  return impl;
}

std::shared_ptr<const detail::FieldImpl> rational_impl() {
  static const std::shared_ptr<const detail::FieldImpl> q = make_impl(FieldSpec::rationals());
  return q;
}

}  // namespace

Field::Field() : impl_(rational_impl()) {}
Field::Field(const FieldSpec& spec)
    : impl_(spec.kind == FieldKind::Rationals ? rational_impl() : make_impl(spec)) {}
Field Field::rationals() { return Field(); }

const FieldSpec& Field::spec() const { return impl_->spec; }
int Field::degree() const { return impl_->deg; }

std::uint64_t Field::order() const {
  if (!is_finite()) throw Error(ErrorKind::NotApplicable, "field is infinite");
  return impl_->q;
}

const std::vector<double>& Field::real_roots() const { return impl_->roots; }

bool Field::operator==(const Field& o) const { return impl_ == o.impl_ || impl_->spec == o.impl_->spec; }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }
Scalar Field::from_int(long v) const { return from_rational(mpq_class(v)); }

Scalar Field::from_rational(const mpq_class& v) const {
  if (is_finite()) {
    std::vector<std::uint32_t> r(impl_->deg, 0);
    r[0] = mod_p(v, impl_->p);
    return Scalar(*this, {}, std::move(r));
  }
  QPoly q(impl_->deg, mpq_class(0));
  q[0] = v;
  return Scalar(*this, std::move(q), {});
}

Scalar Field::generator() const {
  if (impl_->deg < 2) throw Error(ErrorKind::NotApplicable, "field " + to_string() + " has no generator");
  return from_poly(QPoly{0, 1});
}

Scalar Field::from_poly(const QPoly& coeffs) const {
  if (is_finite()) {
    FpPoly f = to_fppoly(coeffs, impl_->p);
    if (impl_->deg == 1 && f.size() > 1) throw Error(ErrorKind::Parse, "GF(p) scalars cannot contain x");
    if (impl_->deg >= 2) fp_reduce(f, impl_->modulus, impl_->p);
    f.resize(impl_->deg, 0);
    return Scalar(*this, {}, std::move(f));
  }
  QPoly c = coeffs;
  poly::trim(c);
  if (impl_->deg == 1) {
    if (poly::degree(c) > 0) throw Error(ErrorKind::Parse, "rational scalars cannot contain x");
  } else {
    c = poly::mod(c, impl_->spec.min_poly);
  }
  c.resize(impl_->deg, mpq_class(0));
  return Scalar(*this, std::move(c), {});
}

Scalar Field::parse_scalar(std::string_view text) const {
  QPoly p = poly::parse(text);
  if (is_finite() && impl_->deg == 1 && poly::degree(p) > 0) throw Error(ErrorKind::Parse, "GF(p) scalars cannot contain x");
  return from_poly(p);
}

std::vector<Scalar> Field::elements() const {
  if (!is_finite()) throw Error(ErrorKind::NotApplicable, "field is infinite");
  std::vector<Scalar> out;
  for (std::uint64_t c = 0; c < impl_->q; ++c) out.push_back(Scalar(*this, {}, impl_->decode(c)));
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar() : field_(), q_{mpq_class(0)} {}

void Scalar::check_same(const Scalar& b) const {
  if (field_.impl_ == b.field_.impl_) return;
  if (field_.impl_->spec == b.field_.impl_->spec) return;
  throw Error(ErrorKind::FieldMismatch, "scalars from " + field_.to_string() + " and " + b.field_.to_string());
}

bool Scalar::is_zero() const {
  if (!r_.empty()) return std::all_of(r_.begin(), r_.end(), [](std::uint32_t x) { return x == 0; });
  return std::all_of(q_.begin(), q_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

bool Scalar::is_one() const {
  if (!r_.empty()) {
    if (r_[0] != 1) return false;
    return std::all_of(r_.begin() + 1, r_.end(), [](std::uint32_t x) { return x == 0; });
  }
  if (q_[0] != 1) return false;
  return std::all_of(q_.begin() + 1, q_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

Scalar Scalar::operator+(const Scalar& b) const {
  check_same(b);
  if (!r_.empty()) {
    std::uint32_t p = field_.impl_->p;
    std::vector<std::uint32_t> r(r_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint32_t>((std::uint64_t(r_[i]) + b.r_[i]) % p);
    return Scalar(field_, {}, std::move(r));
  }
  QPoly q(q_.size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = q_[i] + b.q_[i];
  return Scalar(field_, std::move(q), {});
}

Scalar Scalar::operator-(const Scalar& b) const {
  check_same(b);
  if (!r_.empty()) {
    std::uint32_t p = field_.impl_->p;
    std::vector<std::uint32_t> r(r_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = static_cast<std::uint32_t>((std::uint64_t(r_[i]) + p - b.r_[i]) % p);
    return Scalar(field_, {}, std::move(r));
  }
  QPoly q(q_.size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = q_[i] - b.q_[i];
  return Scalar(field_, std::move(q), {});
}

Scalar Scalar::operator-() const {
  if (!r_.empty()) {
    std::uint32_t p = field_.impl_->p;
    std::vector<std::uint32_t> r(r_.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = r_[i] == 0 ? 0 : p - r_[i];
    return Scalar(field_, {}, std::move(r));
  }
  QPoly q(q_.size());
  for (size_t i = 0; i < q.size(); ++i) q[i] = -q_[i];
  return Scalar(field_, std::move(q), {});
}

Scalar Scalar::operator*(const Scalar& b) const {
  check_same(b);
  const auto& F = *field_.impl_;
  if (!r_.empty()) {
    if (F.deg == 1) return Scalar(field_, {}, {static_cast<std::uint32_t>(std::uint64_t(r_[0]) * b.r_[0] % F.p)});
    if (is_zero() || b.is_zero()) return Scalar(field_, {}, std::vector<std::uint32_t>(F.deg, 0));
    int la = F.log_table[F.code(r_)], lb = F.log_table[F.code(b.r_)];
    return Scalar(field_, {}, F.decode(F.exp_table[(la + lb) % (F.q - 1)]));
  }
  int d = F.deg;
  if (d == 1) return Scalar(field_, {q_[0] * b.q_[0]}, {});
  QPoly prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (sgn(q_[i]) == 0) continue;
    for (int j = 0; j < d; ++j)
      if (sgn(b.q_[j]) != 0) prod[i + j] += q_[i] * b.q_[j];
  }
  const QPoly& f = F.spec.min_poly;
  for (int i = 2 * d - 2; i >= d; --i) {
    if (sgn(prod[i]) == 0) continue;
    mpq_class c = prod[i];
    for (int j = 0; j < d; ++j)
      if (sgn(f[j]) != 0) prod[i - d + j] -= c * f[j];
  }
  prod.resize(d);
  return Scalar(field_, std::move(prod), {});
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  const auto& F = *field_.impl_;
  if (!r_.empty()) {
    if (F.deg == 1) {
      mpz_class a(r_[0]), P(F.p), inv;
      mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), P.get_mpz_t());
      return Scalar(field_, {}, {static_cast<std::uint32_t>(inv.get_ui())});
    }
    int la = F.log_table[F.code(r_)];
    return Scalar(field_, {}, F.decode(F.exp_table[(F.q - 1 - la) % (F.q - 1)]));
  }
  if (F.deg == 1) return Scalar(field_, {1 / q_[0]}, {});
  // extended Euclid against min_poly
  QPoly r0 = F.spec.min_poly, r1 = q_, s0, s1{1};
  poly::trim(r1);
  while (!r1.empty()) {
    QPoly quo, rem;
    poly::divmod(r0, r1, quo, rem);
    QPoly s2 = poly::sub(s0, poly::mul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (poly::degree(r0) != 0)
    throw Error(ErrorKind::DivisionByZero, "element is a zero divisor (min_poly is reducible)");
  QPoly s = poly::scale(s0, 1 / mpq_class(r0[0]));
  s = poly::mod(s, F.spec.min_poly);
  s.resize(F.deg, mpq_class(0));
  return Scalar(field_, std::move(s), {});
}

Scalar Scalar::operator/(const Scalar& b) const {
  check_same(b);
  return *this * b.inv();
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar result = field_.one(), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& b) const {
  check_same(b);
  return q_ == b.q_ && r_ == b.r_;
}

int Scalar::compare(const Scalar& b) const {
  check_same(b);
  if (!r_.empty()) {
    for (size_t i = 0; i < r_.size(); ++i)
      if (r_[i] != b.r_[i]) return r_[i] < b.r_[i] ? -1 : 1;
    return 0;
  }
  for (size_t i = 0; i < q_.size(); ++i) {
    int c = cmp(q_[i], b.q_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::size_t hash_mpz(const mpz_class& z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 7);
  const size_t n = mpz_size(z.get_mpz_t());
  for (size_t i = 0; i < n; ++i) hash_combine(h, std::hash<mp_limb_t>{}(mpz_getlimbn(z.get_mpz_t(), i)));
  return h;
}

std::size_t hash_mpq(const mpq_class& q) {
  std::size_t h = hash_mpz(q.get_num());
  hash_combine(h, hash_mpz(q.get_den()));
  return h;
}

std::size_t Scalar::hash() const {
  std::size_t h = 0x51ed27;
  for (auto r : r_) hash_combine(h, r);
  for (auto& q : q_) hash_combine(h, hash_mpq(q));
  return h;
}

std::string Scalar::to_string() const {
  if (!r_.empty()) {
    if (r_.size() == 1) return std::to_string(r_[0]);
    QPoly q;
    for (auto r : r_) q.push_back(mpq_class(r));
    return poly::format(q);
  }
  if (q_.size() == 1) return q_[0].get_str();
  return poly::format(q_);
}

bool Scalar::is_rational() const {
  if (!r_.empty()) return std::all_of(r_.begin() + 1, r_.end(), [](std::uint32_t x) { return x == 0; });
  return std::all_of(q_.begin() + 1, q_.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

mpq_class Scalar::as_rational() const {
  if (!r_.empty() || !is_rational()) throw Error(ErrorKind::NotApplicable, "scalar is not a rational number");
  return q_[0];
}

double Scalar::real_embedding(int root_index) const {
  if (!r_.empty()) throw Error(ErrorKind::NoRealRoot, "finite fields have no real embedding");
  if (q_.size() == 1) return q_[0].get_d();
  const auto& roots = field_.real_roots();
  if (roots.empty()) throw Error(ErrorKind::NoRealRoot, "min_poly of " + field_.to_string() + " has no real root");
  if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
    throw Error(ErrorKind::OutOfRange, "root_index " + std::to_string(root_index) + " out of range (" +
                                           std::to_string(roots.size()) + " real roots)");
  return poly::eval(q_, roots[root_index]);
}

}  // namespace lineops
