#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lineops/error.hpp"
#include "lineops/field.hpp"

using namespace lineops;

namespace {

// GF(2^k) by carry-less multiplication modulo a bit-encoded polynomial.
unsigned gf2_mul(unsigned a, unsigned b, unsigned mod, int k) {
  unsigned r = 0;
  for (int i = 0; i < k; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int i = 2 * k - 2; i >= k; --i)
    if (r >> i & 1) r ^= mod << (i - k);
  return r;
}

unsigned bits_of(const Scalar& s) {
  unsigned v = 0;
  auto& r = s.residues();
  for (std::size_t i = 0; i < r.size(); ++i) v |= (r[i] & 1u) << i;
  return v;
}

long powmod(long b, long e, long p) {
  long r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

TEST_CASE("rationals: arithmetic in lowest terms") {
  Field q;
  auto a = q.parse_scalar("6/4"), b = q.parse_scalar("-1/3");
  CHECK(a.to_string() == "3/2");
  CHECK((a + b).to_string() == "7/6");
  CHECK((a * b).to_string() == "-1/2");
  CHECK((a / b).to_string() == "-9/2");
  CHECK((a - a).is_zero());
  CHECK(a.inv() * a == q.one());
  CHECK_THROWS_AS(q.zero().inv(), Error);
}

TEST_CASE("division by zero is a DivisionByZero error") {
  Field q;
  try {
    (void)(q.one() / q.zero());
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DivisionByZero);
  }
}

TEST_CASE("number field Q(w), w^2+w+1=0") {
  Field f = Field::parse("Q[x]/(x^2+x+1)");
  auto w = f.generator();
  CHECK((w * w + w + f.one()).is_zero());
  CHECK(w.pow(3) == f.one());
  CHECK(w.inv() == w * w);
  auto s = f.parse_scalar("1/2-1/2*x");
  CHECK(f.parse_scalar(s.to_string()) == s);
  CHECK(f.real_roots().empty());
}

TEST_CASE("number field inverses against random elements") {
  Field f = Field::parse("Q[x]/(x^3+x^2-2*x-1)");
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int it = 0; it < 50; ++it) {
    Scalar a = f.from_int(d(rng)) + f.from_int(d(rng)) * f.generator() + f.from_int(d(rng)) * f.generator().pow(2);
    if (a.is_zero()) continue;
    CHECK(a * a.inv() == f.one());
  }
  CHECK(f.real_roots().size() == 3);
}

TEST_CASE("reducible minimal polynomial is rejected") {
  CHECK_THROWS_AS(Field::parse("Q[x]/(x^2-1)"), Error);
  CHECK_THROWS_AS(Field::parse("GF(6)"), Error);
  CHECK_THROWS_AS(Field::parse("Q[y"), Error);
}

TEST_CASE("prime field inverses agree with Fermat") {
  for (long p : {2L, 3L, 5L, 7L, 101L}) {
    Field f(FieldSpec::prime_field(static_cast<std::uint32_t>(p)));
    for (long a = 1; a < p; ++a) {
      auto x = f.from_int(a).inv();
      CHECK(x == f.from_int(powmod(a, p - 2, p)));
    }
    CHECK(f.from_int(p).is_zero());
    CHECK(f.from_int(-1) == f.from_int(p - 1));
  }
}

TEST_CASE("GF(4) and GF(8) multiplication against carry-less oracle") {
  struct Case {
    unsigned q, mod;
    int k;
    const char* text;
  };
  for (auto c : {Case{4, 0b111, 2, "GF(4;x^2+x+1)"}, Case{8, 0b1011, 3, "GF(8;x^3+x+1)"}}) {
    Field f = Field::parse(c.text);
    CHECK(f.order() == c.q);
    auto els = f.elements();
    REQUIRE(els.size() == c.q);
    for (auto& a : els)
      for (auto& b : els) CHECK(bits_of(a * b) == gf2_mul(bits_of(a), bits_of(b), c.mod, c.k));
  }
}

TEST_CASE("field text round-trips") {
  for (const char* t : {"Q", "Q[x]/(x^2+x+1)", "GF(7)", "GF(4;x^2+x+1)"}) {
    auto s = FieldSpec::parse(t);
    CHECK(FieldSpec::parse(s.to_string()) == s);
  }
  CHECK(Field::parse("GF(4)").order() == 4);
}

TEST_CASE("mixing fields is an error") {
  Field q, g(FieldSpec::prime_field(5));
  try {
    (void)(q.one() + g.one());
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FieldMismatch);
  }
}

TEST_CASE("canonical representatives give equality and hashing") {
  Field f = Field::parse("Q[x]/(x^2-2)");
  auto a = f.generator() * f.generator(), b = f.from_int(2);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a.compare(b) == 0);
  CHECK(f.parse_scalar("x").real_embedding(1) == doctest::Approx(1.41421356));
  CHECK(f.parse_scalar("x").real_embedding(0) == doctest::Approx(-1.41421356));
}
