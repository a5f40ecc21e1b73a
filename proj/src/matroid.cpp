#include "lineops/matroid.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lineops {

Matroid3::Matroid3(int ground, std::vector<std::vector<int>> flats) : m_(ground) {
  if (ground < 0) throw Error(ErrorKind::OutOfRange, "negative ground set size");
  for (auto& f : flats) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int e : f)
      if (e < 0 || e >= ground) throw Error(ErrorKind::OutOfRange, "flat element " + std::to_string(e) + " out of range");
    if (f.size() >= 3) flats_.push_back(std::move(f));
  }
  std::sort(flats_.begin(), flats_.end());
  flats_.erase(std::unique(flats_.begin(), flats_.end()), flats_.end());
  std::vector<std::vector<int>> cover(ground, std::vector<int>(ground, -1));
  for (std::size_t i = 0; i < flats_.size(); ++i)
    for (std::size_t x = 0; x < flats_[i].size(); ++x)
      for (std::size_t y = x + 1; y < flats_[i].size(); ++y) {
        int& c = cover[flats_[i][x]][flats_[i][y]];
        if (c >= 0)
          throw Error(ErrorKind::Degenerate, "flats " + std::to_string(c) + " and " + std::to_string(i) +
                                                 " share two elements");
        c = static_cast<int>(i);
      }
}

bool Matroid3::is_nonbasis(int a, int b, int c) const {
  for (auto& f : flats_)
    if (std::binary_search(f.begin(), f.end(), a) && std::binary_search(f.begin(), f.end(), b) &&
        std::binary_search(f.begin(), f.end(), c))
      return a != b && b != c && a != c;
  return false;
}

std::vector<int> Matroid3::element_signature(int e) const {
  std::vector<int> s;
  for (auto& f : flats_)
    if (std::binary_search(f.begin(), f.end(), e)) s.push_back(static_cast<int>(f.size()));
  std::sort(s.rbegin(), s.rend());
  return s;
}

std::vector<std::vector<int>> Matroid3::nonbases() const {
  std::vector<std::vector<int>> out;
  for (auto& f : flats_)
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        for (std::size_t k = j + 1; k < f.size(); ++k) out.push_back({f[i], f[j], f[k]});
  std::sort(out.begin(), out.end());
  return out;
}

Matroid3 extract_matroid(const std::vector<ProjLine>& lines) {
  if (lines.empty()) return Matroid3(0, {});
  Arrangement A(lines[0].field(), lines);
  if (A.size() != lines.size()) throw Error(ErrorKind::Degenerate, "labelled lines are not distinct");
  std::vector<int> label(A.size());
  for (std::size_t i = 0; i < lines.size(); ++i) label[*A.index_of(lines[i])] = static_cast<int>(i);
  auto sel = MultiplicitySelector::at_least_n(3);
  std::vector<std::vector<int>> flats;
  for (auto& pi : incidence_index(A, &sel)) {
    std::vector<int> f;
    for (int l : pi.lines) f.push_back(label[l]);
    flats.push_back(std::move(f));
  }
  return Matroid3(static_cast<int>(lines.size()), std::move(flats));
}

Matroid3 extract_matroid(const Arrangement& L) { return extract_matroid(L.items()); }

namespace {

struct PairFlats {
  std::vector<std::vector<int>> f;  // flat index spanned by {i,j}, -1 for a 2-point flat
  explicit PairFlats(const Matroid3& m) : f(m.ground(), std::vector<int>(m.ground(), -1)) {
    for (std::size_t i = 0; i < m.flats().size(); ++i) {
      auto& fl = m.flats()[i];
      for (int a : fl)
        for (int b : fl)
          if (a != b) f[a][b] = static_cast<int>(i);
    }
  }
};

}  // namespace

std::optional<std::vector<int>> matroid_isomorphic(const Matroid3& a, const Matroid3& b) {
  const int m = a.ground();
  if (m != b.ground() || a.flats().size() != b.flats().size()) return std::nullopt;
  auto sizes = [](const Matroid3& x) {
    std::vector<std::size_t> s;
    for (auto& f : x.flats()) s.push_back(f.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(a) != sizes(b)) return std::nullopt;

  std::vector<std::vector<int>> sa(m), sb(m);
  for (int e = 0; e < m; ++e) {
    sa[e] = a.element_signature(e);
    sb[e] = b.element_signature(e);
  }
  {
    auto x = sa, y = sb;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return std::nullopt;
  }
  PairFlats pa(a), pb(b);

  // Visit elements so that each new one shares flats with those already
  // placed; ties broken by index, which keeps the witness deterministic.
  std::vector<int> order;
  std::vector<char> placed(m, 0);
  for (int step = 0; step < m; ++step) {
    int best = -1;
    long best_score = -1;
    for (int e = 0; e < m; ++e) {
      if (placed[e]) continue;
      long score = 0;
      for (int o : order)
        if (pa.f[e][o] >= 0) score += 2;
      score = score * 1000 + static_cast<long>(sa[e].size());
      if (score > best_score) {
        best_score = score;
        best = e;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }

  std::vector<int> phi(m, -1), used(m, 0);
  std::vector<int> fmap(a.flats().size(), -1), finv(b.flats().size(), -1);
  std::function<bool(int)> go = [&](int depth) -> bool {
    if (depth == m) return true;
    int x = order[depth];
    for (int y = 0; y < m; ++y) {
      if (used[y] || sa[x] != sb[y]) continue;
      std::vector<int> newly;  // flats of a mapped at this level
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int u = order[d];
        int fa = pa.f[x][u], fb = pb.f[y][phi[u]];
        if ((fa < 0) != (fb < 0)) {
          ok = false;
        } else if (fa >= 0) {
          if (fmap[fa] < 0 && finv[fb] < 0) {
            if (a.flats()[fa].size() != b.flats()[fb].size()) {
              ok = false;
            } else {
              fmap[fa] = fb;
              finv[fb] = fa;
              newly.push_back(fa);
            }
          } else if (fmap[fa] != fb) {
            ok = false;
          }
        }
      }
      if (ok) {
        phi[x] = y;
        used[y] = 1;
        if (go(depth + 1)) return true;
        phi[x] = -1;
        used[y] = 0;
      }
      for (int fa : newly) {
        finv[fmap[fa]] = -1;
        fmap[fa] = -1;
      }
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return phi;
}

Matroid3 IncidenceMatrix::to_matroid() const {
  std::vector<std::vector<int>> flats;
  for (auto& r : entries) {
    std::vector<int> f;
    for (int c = 0; c < cols; ++c)
      if (r[c]) f.push_back(c);
    flats.push_back(std::move(f));
  }
  return Matroid3(cols, std::move(flats));
}

std::string IncidenceMatrix::to_string() const {
  std::string s;
  for (auto& r : entries) {
    for (int c = 0; c < cols; ++c) s += (c ? " " : "") + std::to_string(int(r[c]));
    s += "\n";
  }
  return s;
}

IncidenceMatrix flashing_incidence(int n) {
  if (n < 3) throw Error(ErrorKind::OutOfRange, "flashing_incidence needs n >= 3");
  if (n > 64) throw Error(ErrorKind::OutOfRange, "flashing_incidence: n too large");
  IncidenceMatrix M;
  M.rows = n * n + 1;
  M.cols = 3 * n;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint8_t> r(M.cols, 0);
      r[k] = 1;
      r[n + i] = 1;
      // row i of G^k has its 1 in column i-k (mod n)
      r[2 * n + ((i - k) % n + n) % n] = 1;
      M.entries.push_back(std::move(r));
    }
  std::vector<std::uint8_t> last(M.cols, 0);
  for (int i = 0; i < n; ++i) last[n + i] = 1;
  M.entries.push_back(std::move(last));
  return M;
}

}  // namespace lineops
