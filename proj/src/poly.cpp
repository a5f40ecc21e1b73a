#include "lineops/poly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <map>

#include "lineops/error.hpp"

namespace lineops::poly {

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const QPoly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (sgn(p[i]) != 0) return i;
  return -1;
}

bool is_monic(const QPoly& p) {
  int d = degree(p);
  return d >= 0 && p[d] == 1;
}

QPoly add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly scale(const QPoly& a, const mpq_class& c) {
  QPoly r(a);
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  int db = degree(b);
  if (db < 0) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  r = a;
  trim(r);
  q.assign(std::max<int>(0, degree(r) - db + 1), mpq_class(0));
  const mpq_class& lead = b[db];
  for (int dr = degree(r); dr >= db; dr = degree(r)) {
    mpq_class c = r[dr] / lead;
    q[dr - db] = c;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= c * b[j];
    trim(r);
  }
  trim(q);
}

QPoly mod(const QPoly& a, const QPoly& b) {
  QPoly q, r;
  divmod(a, b, q, r);
  return r;
}

QPoly monic_gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return scale(a, 1 / mpq_class(a.back()));
}

QPoly derivative(const QPoly& a) {
  QPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<long>(i));
  trim(r);
  return r;
}

mpq_class eval(const QPoly& a, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double eval(const QPoly& a, double x) {
  long double acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * x + it->get_d();
  return static_cast<double>(acc);
}

namespace {

struct Cursor {
  std::string_view s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  bool at_end() {
    ws();
    return i >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::Parse, "cannot parse polynomial '" + std::string(s) + "': " + what);
  }
  std::string digits() {
    ws();
    size_t b = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return std::string(s.substr(b, i - b));
  }
};

}  // namespace

QPoly parse(std::string_view text) {
  Cursor c{text};
  if (c.at_end()) c.fail("empty");
  std::map<int, mpq_class> terms;
  bool first = true;
  while (!c.at_end()) {
    int sign = 1;
    if (c.eat('+')) {
    } else if (c.eat('-')) {
      sign = -1;
    } else if (!first) {
      c.fail("expected + or -");
    }
    first = false;
    mpq_class coef = 1;
    bool have_coef = false;
    std::string num = c.digits();
    if (!num.empty()) {
      have_coef = true;
      coef = mpq_class(mpz_class(num));
      if (c.eat('/')) {
        std::string den = c.digits();
        if (den.empty()) c.fail("missing denominator");
        mpz_class d(den);
        if (d == 0) c.fail("zero denominator");
        coef /= mpq_class(d);
      }
    }
    int e = 0;
    bool star = c.eat('*');
    if (star && !have_coef) c.fail("dangling *");
    c.ws();
    if (c.i < c.s.size() && c.s[c.i] == 'x') {
      ++c.i;
      e = 1;
      if (c.eat('^')) {
        std::string ex = c.digits();
        if (ex.empty()) c.fail("missing exponent");
        e = std::stoi(ex);
      }
    } else if (star || !have_coef) {
      c.fail("expected a term");
    }
    terms[e] += sign * coef;
  }
  QPoly p;
  for (auto& [e, v] : terms) {
    if (static_cast<int>(p.size()) <= e) p.resize(e + 1);
    p[e] += v;
  }
  trim(p);
  return p;
}

std::string format(const QPoly& p) {
  std::string out;
  for (int e = degree(p); e >= 0; --e) {
    const mpq_class& c = p[e];
    if (sgn(c) == 0) continue;
    mpq_class a = abs(c);
    if (sgn(c) < 0)
      out += out.empty() ? "-" : "-";
    else if (!out.empty())
      out += "+";
    if (e == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += "x";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "0" : out;
}

QPoly cyclotomic(int n) {
  if (n < 1 || n > 30)
    throw Error(ErrorKind::OutOfRange, "cyclotomic polynomial index must be in [1, 30]");
  QPoly f(n + 1);
  f[0] = -1;
  f[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    QPoly q, r;
    divmod(f, cyclotomic(d), q, r);
    f = q;
  }
  return f;
}

QPoly real_cyclotomic(int n) {
  if (n < 3 || n > 30) throw Error(ErrorKind::OutOfRange, "real cyclotomic index must be in [3, 30]");
  // x^{-e} Phi_n(x) = a_e + sum_k a_{e+k} (x^k + x^{-k}) and x^k + x^{-k} = D_k(u).
  QPoly phi = cyclotomic(n);
  int e = degree(phi) / 2;
  std::vector<QPoly> D{QPoly{2}, QPoly{0, 1}};
  for (int k = 2; k <= e; ++k) D.push_back(sub(mul(QPoly{0, 1}, D[k - 1]), D[k - 2]));
  QPoly out{phi[e]};
  for (int k = 1; k <= e; ++k) out = add(out, scale(D[k], phi[e + k]));
  return out;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<mpq_class> rational_roots(const QPoly& p0) {
  QPoly p = p0;
  trim(p);
  std::vector<mpq_class> roots;
  if (degree(p) < 1) return roots;
  mpz_class l = 1;
  for (auto& c : p) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> a;
  for (auto& c : p) a.push_back(mpz_class(c * l));
  size_t shift = 0;
  while (a[shift] == 0) ++shift;
  if (shift > 0) roots.push_back(0);
  a.erase(a.begin(), a.begin() + shift);
  if (a.size() < 2) return roots;
  QPoly q(a.begin(), a.end());
  for (auto& num : divisors(a.front()))
    for (auto& den : divisors(a.back()))
      for (int s : {1, -1}) {
        mpq_class x(num * s, den);
        x.canonicalize();
        if (eval(q, x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> real_roots(const QPoly& p0) {
  QPoly p = p0;
  trim(p);
  int d = degree(p);
  std::vector<double> out;
  if (d < 1) return out;
  if (d == 1) {
    out.push_back(mpq_class(-p[0] / p[1]).get_d());
    return out;
  }
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  double lead = p[d].get_d();
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) C(i, d - 1) = -p[i].get_d() / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  QPoly dp = derivative(p);
  for (int i = 0; i < d; ++i) {
    std::complex<double> z = es.eigenvalues()[i];
    if (std::abs(z.imag()) > 1e-6 * (1 + std::abs(z))) continue;
    long double x = z.real();
    for (int it = 0; it < 60; ++it) {
      long double fx = 0, fpx = 0;
      for (auto c = p.rbegin(); c != p.rend(); ++c) fx = fx * x + c->get_d();
      for (auto c = dp.rbegin(); c != dp.rend(); ++c) fpx = fpx * x + c->get_d();
      if (fpx == 0) break;
      long double step = fx / fpx;
      x -= step;
      if (std::fabs(static_cast<double>(step)) < 1e-18) break;
    }
    out.push_back(static_cast<double>(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lineops::poly
