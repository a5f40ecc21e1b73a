// Pair-grouping incidence engine shared by the point and line operators.
//
// Line i is swept against every j > i whose pair has not already been
// explained by an earlier point; the meets are grouped on a local hash map.
// A group found while sweeping i is owned by i (no smaller index passes
// through it), so every point is emitted exactly once with its full incident
// set, and pairs inside a group of size >= 2 are marked so that later lines
// skip them.  Rational input runs on primitive integer triples, choosing the
// narrowest integer width that cannot overflow.

#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

#include "lineops/arrangement.hpp"

namespace lineops {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

class PairMarks {
 public:
  explicit PairMarks(std::size_t n) : n_(n), bits_(n < 2 ? 0 : (n * (n - 1) / 2 + 63) / 64, 0) {}
  bool get(std::size_t i, std::size_t j) const {
    std::size_t k = idx(i, j);
    return (bits_[k >> 6] >> (k & 63)) & 1;
  }
  void set(std::size_t i, std::size_t j) {
    std::size_t k = idx(i, j);
    bits_[k >> 6] |= std::uint64_t(1) << (k & 63);
  }

 private:
  std::size_t idx(std::size_t i, std::size_t j) const { return i * (2 * n_ - i - 1) / 2 + (j - i - 1); }
  std::size_t n_;
  std::vector<std::uint64_t> bits_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = std::countr_zero(a | b);
  a >>= std::countr_zero(a);
  while (b != 0) {
    b >>= std::countr_zero(b);
    if (a > b) std::swap(a, b);
    b -= a;
  }
  return a << shift;
}

int ctz128(u128 x) {
  std::uint64_t lo = static_cast<std::uint64_t>(x);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

u128 gcd_u128(u128 a, u128 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = ctz128(a | b);
  a >>= ctz128(a);
  while (b != 0) {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  }
  return a << shift;
}

template <class T>
T abs_val(T x) {
  return x < 0 ? -x : x;
}

struct SmallKernel {
  using Key = std::array<std::int64_t, 3>;
  struct Hash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = static_cast<std::uint64_t>(k[0]) * 0x9E3779B97F4A7C15ULL;
      h ^= static_cast<std::uint64_t>(k[1]) + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
      h ^= static_cast<std::uint64_t>(k[2]) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };
  static bool cross(const Key& a, const Key& b, Key& o) {
    o[0] = a[1] * b[2] - a[2] * b[1];
    o[1] = a[2] * b[0] - a[0] * b[2];
    o[2] = a[0] * b[1] - a[1] * b[0];
    std::uint64_t g = gcd_u64(gcd_u64(abs_val(o[0]), abs_val(o[1])), abs_val(o[2]));
    if (g == 0) return false;
    std::int64_t lead = o[0] != 0 ? o[0] : (o[1] != 0 ? o[1] : o[2]);
    std::int64_t s = lead < 0 ? -static_cast<std::int64_t>(g) : static_cast<std::int64_t>(g);
    o[0] /= s;
    o[1] /= s;
    o[2] /= s;
    return true;
  }
  static Triple to_triple(const Key& k, const Field& f) {
    std::array<mpz_class, 3> z{mpz_class(static_cast<long>(k[0])), mpz_class(static_cast<long>(k[1])),
                               mpz_class(static_cast<long>(k[2]))};
    return to_triple_z(z, f);
  }
  static Triple to_triple_z(const std::array<mpz_class, 3>& z, const Field& f) {
    int lead = z[0] != 0 ? 0 : (z[1] != 0 ? 1 : 2);
    Triple t;
    for (int i = 0; i < 3; ++i) {
      mpq_class q(z[i], z[lead]);
      q.canonicalize();
      t[i] = f.from_rational(q);
    }
    return t;
  }
};

mpz_class from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-v) : static_cast<u128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

struct WideKernel {
  using Key = std::array<i128, 3>;
  struct Hash {
    std::size_t operator()(const Key& k) const {
      std::uint64_t h = 0x84222325CBF29CE4ULL;
      for (auto v : k) {
        std::uint64_t lo = static_cast<std::uint64_t>(static_cast<u128>(v));
        std::uint64_t hi = static_cast<std::uint64_t>(static_cast<u128>(v) >> 64);
        h ^= lo * 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        h ^= hi + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }
  };
  static bool cross(const Key& a, const Key& b, Key& o) {
    o[0] = a[1] * b[2] - a[2] * b[1];
    o[1] = a[2] * b[0] - a[0] * b[2];
    o[2] = a[0] * b[1] - a[1] * b[0];
    u128 g = gcd_u128(gcd_u128(abs_val(o[0]), abs_val(o[1])), abs_val(o[2]));
    if (g == 0) return false;
    i128 lead = o[0] != 0 ? o[0] : (o[1] != 0 ? o[1] : o[2]);
    i128 s = lead < 0 ? -static_cast<i128>(g) : static_cast<i128>(g);
    o[0] /= s;
    o[1] /= s;
    o[2] /= s;
    return true;
  }
  static Triple to_triple(const Key& k, const Field& f) {
    return SmallKernel::to_triple_z({from_i128(k[0]), from_i128(k[1]), from_i128(k[2])}, f);
  }
};

struct BigKernel {
  using Key = std::array<mpz_class, 3>;
  struct Hash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 0;
      for (auto& z : k) hash_combine(h, hash_mpz(z));
      return h;
    }
  };
  static bool cross(const Key& a, const Key& b, Key& o) {
    o[0] = a[1] * b[2] - a[2] * b[1];
    o[1] = a[2] * b[0] - a[0] * b[2];
    o[2] = a[0] * b[1] - a[1] * b[0];
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), o[0].get_mpz_t(), o[1].get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), o[2].get_mpz_t());
    if (g == 0) return false;
    const mpz_class& lead = o[0] != 0 ? o[0] : (o[1] != 0 ? o[1] : o[2]);
    if (lead < 0) g = -g;
    for (auto& z : o) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    return true;
  }
  static Triple to_triple(const Key& k, const Field& f) { return SmallKernel::to_triple_z(k, f); }
};

struct ScalarKernel {
  using Key = Triple;
  struct Hash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 0;
      for (auto& s : k) hash_combine(h, s.hash());
      return h;
    }
  };
  static bool cross(const Key& a, const Key& b, Key& o) {
    o = lineops::cross(a, b);
    if (triple_is_zero(o)) return false;
    normalize_triple(o);
    return true;
  }
  static Triple to_triple(const Key& k, const Field&) { return k; }
};

struct Group {
  std::size_t key;  // index into the key store
  std::vector<int> members;
};

template <class K>
struct SweepOut {
  std::vector<typename K::Key> keys;
  std::vector<std::vector<int>> members;
  std::map<int, std::int64_t> sizes;
};

// want(k) decides whether a k-fold group is stored; sizes are always counted.
template <class K, class Want>
SweepOut<K> sweep(const std::vector<typename K::Key>& e, Want&& want) {
  using Key = typename K::Key;
  SweepOut<K> out;
  const std::size_t n = e.size();
  PairMarks marks(n);
  std::unordered_map<Key, int, typename K::Hash> local;
  std::vector<int> head, count, next(n, -1);
  std::vector<const Key*> group_key;
  Key scratch;
  for (std::size_t i = 0; i < n; ++i) {
    local.clear();
    head.clear();
    count.clear();
    group_key.clear();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (marks.get(i, j)) continue;
      if (!K::cross(e[i], e[j], scratch)) continue;
      auto [it, inserted] = local.try_emplace(scratch, static_cast<int>(head.size()));
      if (inserted) {
        head.push_back(-1);
        count.push_back(0);
        group_key.push_back(&it->first);
      }
      int g = it->second;
      next[j] = head[g];
      head[g] = static_cast<int>(j);
      ++count[g];
    }
    for (std::size_t g = 0; g < head.size(); ++g) {
      int mult = count[g] + 1;
      ++out.sizes[mult];
      bool keep = want(mult);
      if (mult < 3 && !keep) continue;
      std::vector<int> js;
      js.reserve(count[g]);
      for (int j = head[g]; j != -1; j = next[j]) js.push_back(j);
      std::reverse(js.begin(), js.end());
      for (std::size_t a = 0; a + 1 < js.size(); ++a)
        for (std::size_t b = a + 1; b < js.size(); ++b) marks.set(js[a], js[b]);
      if (keep) {
        js.insert(js.begin(), static_cast<int>(i));
        out.keys.push_back(*group_key[g]);
        out.members.push_back(std::move(js));
      }
    }
  }
  return out;
}

struct Grouped {
  std::vector<Triple> coords;
  std::vector<std::vector<int>> members;
  std::map<int, std::int64_t> sizes;
};

template <class K>
Grouped finish(SweepOut<K>&& s, const Field& f) {
  Grouped g;
  g.sizes = std::move(s.sizes);
  g.coords.reserve(s.keys.size());
  for (auto& k : s.keys) g.coords.push_back(K::to_triple(k, f));
  g.members = std::move(s.members);
  return g;
}

template <class Want>
Grouped group_meets(const std::vector<Triple>& in, const Field& f, Want&& want) {
  if (f.kind() == FieldKind::Rationals) {
    std::vector<std::array<mpz_class, 3>> ints;
    ints.reserve(in.size());
    std::size_t bits = 0;
    for (auto& t : in) {
      mpz_class l = 1;
      for (auto& s : t) {
        mpz_class den = s.as_rational().get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
      }
      std::array<mpz_class, 3> z;
      for (int i = 0; i < 3; ++i) z[i] = mpz_class(t[i].as_rational() * l);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), z[0].get_mpz_t(), z[1].get_mpz_t());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[2].get_mpz_t());
      for (auto& v : z) {
        v /= g;
        bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
      }
      ints.push_back(std::move(z));
    }
    if (bits <= 30) {
      std::vector<SmallKernel::Key> keys;
      for (auto& z : ints) keys.push_back({z[0].get_si(), z[1].get_si(), z[2].get_si()});
      return finish(sweep<SmallKernel>(keys, want), f);
    }
    if (bits <= 62) {
      std::vector<WideKernel::Key> keys;
      for (auto& z : ints) keys.push_back({z[0].get_si(), z[1].get_si(), z[2].get_si()});
      return finish(sweep<WideKernel>(keys, want), f);
    }
    return finish(sweep<BigKernel>(ints, want), f);
  }
  return finish(sweep<ScalarKernel>(in, want), f);
}

template <class Elem>
std::vector<Triple> coords_of(const ElementSet<Elem>& s) {
  std::vector<Triple> v;
  v.reserve(s.size());
  for (auto& e : s) v.push_back(e.coords());
  return v;
}

template <class Out, class In>
std::vector<std::pair<Out, std::vector<int>>> grouped(const ElementSet<In>& s, const MultiplicitySelector* only) {
  auto g = group_meets(coords_of(s), s.field(), [&](int k) { return only == nullptr || only->contains(k); });
  std::vector<std::pair<Out, std::vector<int>>> out;
  out.reserve(g.coords.size());
  for (std::size_t i = 0; i < g.coords.size(); ++i)
    out.emplace_back(Out::trusted(std::move(g.coords[i])), std::move(g.members[i]));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

std::vector<PointIncidence> incidence_index(const Arrangement& L, const MultiplicitySelector* only) {
  std::vector<PointIncidence> out;
  for (auto& [p, m] : grouped<ProjPoint>(L, only)) out.push_back({p, std::move(m)});
  return out;
}

std::vector<LineIncidence> line_index(const PointConfig& P, const MultiplicitySelector* only) {
  std::vector<LineIncidence> out;
  for (auto& [l, m] : grouped<ProjLine>(P, only)) out.push_back({l, std::move(m)});
  return out;
}

PointConfig points_operator(const MultiplicitySelector& sel, const Arrangement& L) {
  std::vector<ProjPoint> pts;
  for (auto& [p, m] : grouped<ProjPoint>(L, &sel)) pts.push_back(p);
  return PointConfig(L.field(), std::move(pts));
}

Arrangement lines_operator(const MultiplicitySelector& sel, const PointConfig& P) {
  std::vector<ProjLine> lines;
  for (auto& [l, m] : grouped<ProjLine>(P, &sel)) lines.push_back(l);
  return Arrangement(P.field(), std::move(lines));
}

Arrangement lambda_op(const MultiplicitySelector& nsel, const MultiplicitySelector& msel, const Arrangement& L) {
  return lines_operator(msel, points_operator(nsel, L));
}

PointConfig psi_op(const MultiplicitySelector& nsel, const MultiplicitySelector& msel, const PointConfig& P) {
  return points_operator(msel, lines_operator(nsel, P));
}

Arrangement dual_lines_op(const MultiplicitySelector& sel, const Arrangement& L) {
  return lines_operator(sel, dualize(L));
}

SingularityProfile profile(const Arrangement& L) {
  SingularityProfile pr;
  pr.d = static_cast<std::int64_t>(L.size());
  if (L.size() < 2) return pr;
  auto g = group_meets(coords_of(L), L.field(), [](int) { return false; });
  pr.t = std::move(g.sizes);
  return pr;
}

}  // namespace lineops
