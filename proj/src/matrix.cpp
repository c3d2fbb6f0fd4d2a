#include "myc/matrix.hpp"

#include <algorithm>
#include <map>

#include "myc/errors.hpp"

namespace myc {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& grid) {
  IntMatrix m;
  m.rows = static_cast<long long>(grid.size());
  m.cols = grid.empty() ? 0 : static_cast<long long>(grid[0].size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (static_cast<long long>(grid[i].size()) != m.cols)
      throw error("ragged matrix rows");
    for (std::size_t j = 0; j < grid[i].size(); ++j)
      if (grid[i][j] != 0)
        m.entries.push_back({static_cast<int>(i), static_cast<int>(j), grid[i][j]});
  }
  return m;
}

std::vector<std::vector<bigint>> IntMatrix::to_dense() const {
  if (rows >= kSparseThreshold || cols >= kSparseThreshold)
    throw error("matrix too large for a dense copy");
  std::vector<std::vector<bigint>> g(rows, std::vector<bigint>(cols, 0));
  for (const auto& e : entries) g[e.r][e.c] = e.v;
  return g;
}

namespace {

// Index of `target` in the lex-sorted face list of dimension d.
long long face_index(const SimplicialComplex& k, int d,
                     const std::uint64_t* target) {
  const int words = k.words;
  long long lo = 0, hi = k.count(d);
  while (lo < hi) {
    long long mid = (lo + hi) / 2;
    if (face_lex_less(k.face(d, mid), target, words))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo >= k.count(d)) throw error("facet not present in complex");
  const std::uint64_t* got = k.face(d, lo);
  for (int w = 0; w < words; ++w)
    if (got[w] != target[w]) throw error("facet not present in complex");
  return lo;
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& k, int d) {
  if (k.is_void()) throw error("boundary of the void complex is undefined");
  if (d < 0) throw error("boundary degree must be nonnegative");

  IntMatrix m;
  m.rows = d == 0 ? 1 : k.count(d - 1);
  m.cols = k.count(d);  // zero above the top dimension
  if (m.cols == 0) return m;

  if (d == 0) {
    for (long long j = 0; j < m.cols; ++j)
      m.entries.push_back({0, static_cast<int>(j), 1});
    return m;
  }

  const int words = k.words;
  std::vector<std::uint64_t> facet(words);
  for (long long j = 0; j < m.cols; ++j) {
    const std::uint64_t* f = k.face(d, j);
    int position = 0;  // index of the omitted vertex within the tuple
    for (int v = 0; v < k.n_vertices; ++v) {
      if (!((f[v / 64] >> (v % 64)) & 1)) continue;
      std::copy(f, f + words, facet.begin());
      facet[v / 64] &= ~(std::uint64_t(1) << (v % 64));
      long long i = face_index(k, d - 1, facet.data());
      m.entries.push_back({static_cast<int>(i), static_cast<int>(j),
                           position % 2 == 0 ? 1LL : -1LL});
      ++position;
    }
  }
  return m;
}

bool boundary_squares_to_zero(const SimplicialComplex& k) {
  for (int d = 1; d <= k.top_dim(); ++d) {
    IntMatrix a = boundary_matrix(k, d - 1);
    IntMatrix b = boundary_matrix(k, d);
    // Sparse product a*b must vanish.
    std::vector<std::vector<std::pair<int, long long>>> a_by_col(
        static_cast<std::size_t>(a.cols));
    for (const auto& e : a.entries) a_by_col[e.c].emplace_back(e.r, e.v);
    std::vector<std::vector<std::pair<int, long long>>> b_by_col(
        static_cast<std::size_t>(b.cols));
    for (const auto& e : b.entries) b_by_col[e.c].emplace_back(e.r, e.v);
    for (long long j = 0; j < b.cols; ++j) {
      std::map<int, long long> acc;
      for (auto [mid, bv] : b_by_col[j])
        for (auto [r, av] : a_by_col[mid]) acc[r] += av * bv;
      for (auto& [r, v] : acc)
        if (v != 0) return false;
    }
  }
  return true;
}

}  // namespace myc
