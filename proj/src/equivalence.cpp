#include <functional>
#include <map>

#include "lineops/arrangement.hpp"

namespace lineops {

namespace {

struct LineData {
  std::vector<std::vector<int>> pair_mult;  // multiplicity of meet(i, j)
  std::vector<std::vector<int>> signature;  // sorted multiplicities of points on each line
};

LineData line_data(const Arrangement& A) {
  std::size_t n = A.size();
  LineData d;
  d.pair_mult.assign(n, std::vector<int>(n, 0));
  d.signature.assign(n, {});
  for (auto& pi : incidence_index(A)) {
    int m = static_cast<int>(pi.lines.size());
    for (int a : pi.lines) {
      d.signature[a].push_back(m);
      for (int b : pi.lines) d.pair_mult[a][b] = m;
    }
  }
  for (auto& s : d.signature) std::sort(s.begin(), s.end());
  return d;
}

}  // namespace

std::optional<Projectivity> projectively_equivalent(const Arrangement& A, const Arrangement& B) {
  A.same_field(B);
  if (A.size() != B.size()) return std::nullopt;
  const std::size_t n = A.size();

  // canonical general-position quadruple of A
  std::array<int, 4> qa{-1, -1, -1, -1};
  auto gp3 = [](const Arrangement& X, int i, int j, int k) { return !concurrent(X[i], X[j], X[k]); };
  bool found = false;
  for (int i = 0; i < static_cast<int>(n) && !found; ++i)
    for (int j = i + 1; j < static_cast<int>(n) && !found; ++j)
      for (int k = j + 1; k < static_cast<int>(n) && !found; ++k) {
        if (!gp3(A, i, j, k)) continue;
        for (int l = k + 1; l < static_cast<int>(n); ++l)
          if (gp3(A, i, j, l) && gp3(A, i, k, l) && gp3(A, j, k, l)) {
            qa = {i, j, k, l};
            found = true;
            break;
          }
      }
  if (!found) throw Error(ErrorKind::Degenerate, "no four lines in general position; equivalence is decided by pencil structure");

  LineData da = line_data(A), db = line_data(B);
  std::array<ProjLine, 4> src{A[qa[0]], A[qa[1]], A[qa[2]], A[qa[3]]};
  std::array<int, 4> qb{};

  auto compatible = [&](int pos, int b) {
    if (da.signature[qa[pos]] != db.signature[b]) return false;
    for (int q = 0; q < pos; ++q) {
      if (qb[q] == b) return false;
      if (da.pair_mult[qa[q]][qa[pos]] != db.pair_mult[qb[q]][b]) return false;
    }
    return true;
  };

  auto try_witness = [&]() -> std::optional<Projectivity> {
    std::array<ProjLine, 4> dst{B[qb[0]], B[qb[1]], B[qb[2]], B[qb[3]]};
    Projectivity g = projectivity_from_line_frames(src, dst);
    for (auto& l : A)
      if (!B.contains(g.apply(l))) return std::nullopt;
    return g;
  };

  for (qb[0] = 0; qb[0] < static_cast<int>(n); ++qb[0]) {
    if (!compatible(0, qb[0])) continue;
    for (qb[1] = 0; qb[1] < static_cast<int>(n); ++qb[1]) {
      if (!compatible(1, qb[1])) continue;
      for (qb[2] = 0; qb[2] < static_cast<int>(n); ++qb[2]) {
        if (!compatible(2, qb[2]) || !gp3(B, qb[0], qb[1], qb[2])) continue;
        for (qb[3] = 0; qb[3] < static_cast<int>(n); ++qb[3]) {
          if (!compatible(3, qb[3])) continue;
          if (!gp3(B, qb[0], qb[1], qb[3]) || !gp3(B, qb[0], qb[2], qb[3]) || !gp3(B, qb[1], qb[2], qb[3])) continue;
          if (auto g = try_witness()) return g;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<RichConic> rich_conics(const PointConfig& P, int min_points) {
  const int n = static_cast<int>(P.size());
  if (n > 30) throw Error(ErrorKind::OutOfRange, "rich_conics is limited to 30 points");
  std::map<Conic, std::vector<int>> found;
  std::array<int, 5> c{};
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == 5) {
      std::array<ProjPoint, 5> pts{P[c[0]], P[c[1]], P[c[2]], P[c[3]], P[c[4]]};
      try {
        Conic k = Conic::through(pts);
        if (found.count(k)) return;
        std::vector<int> on;
        for (int i = 0; i < n; ++i)
          if (k.contains(P[i])) on.push_back(i);
        found.emplace(k, std::move(on));
      } catch (const Error&) {
        // four of the five collinear: the conic is not unique
      }
      return;
    }
    for (int i = start; i <= n - (5 - depth); ++i) {
      c[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (n >= 5) rec(0, 0);
  std::vector<RichConic> out;
  for (auto& [k, on] : found)
    if (static_cast<int>(on.size()) >= min_points) out.push_back({k, on, k.is_irreducible()});
  return out;
}

}  // namespace lineops
