#include "myc/snf.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <tuple>

#include "myc/errors.hpp"
#include "myc/kernels/kernels.hpp"

namespace myc {

namespace {

// Largest magnitude the sparse phase is willing to store. Unit-pivot
// elimination on boundary matrices keeps entries tiny in practice; if growth
// ever passes this guard the computation restarts on the dense
// arbitrary-precision path rather than risk wraparound.
constexpr long long kEntryGuard = 1LL << 56;
constexpr long long kDenseCap = 4096;

struct sparse_overflow : std::exception {};

// ---------------------------------------------------------------------------
// Dense exact phase: classical reduction with minimal-|pivot| selection and
// the divisibility fix-up, entirely in arbitrary precision.
// ---------------------------------------------------------------------------

std::vector<bigint> dense_snf(std::vector<std::vector<bigint>> a) {
  const long long m = static_cast<long long>(a.size());
  const long long n = m ? static_cast<long long>(a[0].size()) : 0;
  std::vector<bigint> factors;

  auto find_min_pivot = [&](long long t, long long& pi, long long& pj) {
    bool found = false;
    bigint best;
    for (long long i = t; i < m; ++i)
      for (long long j = t; j < n; ++j) {
        if (a[i][j] == 0) continue;
        bigint av = abs(a[i][j]);
        if (!found || av < best) {
          found = true;
          best = av;
          pi = i;
          pj = j;
          if (best == 1) return true;
        }
      }
    return found;
  };

  for (long long t = 0; t < std::min(m, n); ++t) {
    while (true) {
      long long pi, pj;
      if (!find_min_pivot(t, pi, pj)) {
        // submatrix is zero
        for (auto& f : factors)
          if (f < 0) f = -f;
        return factors;
      }
      std::swap(a[t], a[pi]);
      if (pj != t)
        for (long long i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

      bool clean = true;
      for (long long i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        bigint q = a[i][t] / a[t][t];
        if (q != 0)
          for (long long j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (long long j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        bigint q = a[t][j] / a[t][t];
        if (q != 0)
          for (long long i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;  // smaller residues appeared; re-pick the pivot

      // Row t and column t are clear. Enforce divisibility into the rest.
      bool fixed = false;
      for (long long i = t + 1; i < m && !fixed; ++i)
        for (long long j = t + 1; j < n && !fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (long long jj = t; jj < n; ++jj) a[t][jj] += a[i][jj];
            fixed = true;
          }
      if (!fixed) break;
    }
    factors.push_back(a[t][t] < 0 ? bigint(-a[t][t]) : a[t][t]);
  }
  return factors;
}

// ---------------------------------------------------------------------------
// Sparse unit-pivot phase. Eliminating a +-1 pivot clears its column by row
// operations and then its row by column operations that touch nothing else,
// so the matrix splits off a diagonal 1 each time. Pivots are chosen by
// Markowitz cost with deterministic ties.
// ---------------------------------------------------------------------------

struct HeapEnt {
  long long cost;
  int c;
  int r;
  bool operator>(const HeapEnt& o) const {
    return std::tie(cost, c, r) > std::tie(o.cost, o.c, o.r);
  }
};

struct SparseElim {
  int m = 0, n = 0;
  std::vector<std::vector<std::pair<int, long long>>> row;  // sorted by col
  std::vector<std::vector<int>> col_rows;  // may hold stale ids
  std::vector<int> rnnz, cnnz;
  std::vector<char> ralive, calive;
  std::priority_queue<HeapEnt, std::vector<HeapEnt>, std::greater<HeapEnt>> heap;
  long long unit_rank = 0;

  explicit SparseElim(const IntMatrix& mat) {
    m = static_cast<int>(mat.rows);
    n = static_cast<int>(mat.cols);
    row.resize(m);
    col_rows.resize(n);
    rnnz.assign(m, 0);
    cnnz.assign(n, 0);
    ralive.assign(m, 1);
    calive.assign(n, 1);
    // Triplets arrive grouped by column in boundary matrices; sort per row.
    for (const auto& e : mat.entries) row[e.r].emplace_back(e.c, e.v);
    for (int r = 0; r < m; ++r) {
      std::sort(row[r].begin(), row[r].end());
      rnnz[r] = static_cast<int>(row[r].size());
      for (auto [c, v] : row[r]) {
        col_rows[c].push_back(r);
        ++cnnz[c];
        if (v == 1 || v == -1) heap.push({0, c, r});  // cost fixed on pop
      }
    }
  }

  long long* find(int r, int c) {
    auto it = std::lower_bound(row[r].begin(), row[r].end(),
                               std::make_pair(c, std::numeric_limits<long long>::min()));
    if (it == row[r].end() || it->first != c) return nullptr;
    return &it->second;
  }

  long long markowitz(int r, int c) const {
    return static_cast<long long>(rnnz[r] - 1) * (cnnz[c] - 1);
  }

  // target -= coef * source, reporting structure changes.
  void row_update(int target, int source, long long coef) {
    std::vector<std::pair<int, long long>> merged;
    merged.reserve(row[target].size() + row[source].size());
    auto a = row[target].begin(), ae = row[target].end();
    auto b = row[source].begin(), be = row[source].end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        __int128 nv = -static_cast<__int128>(coef) * b->second;
        if (nv > kEntryGuard || nv < -kEntryGuard) throw sparse_overflow{};
        int c = b->first;
        merged.emplace_back(c, static_cast<long long>(nv));
        col_rows[c].push_back(target);
        ++cnnz[c];
        if (nv == 1 || nv == -1) heap.push({markowitz(target, c), c, target});
        ++b;
      } else {
        __int128 nv = static_cast<__int128>(a->second) -
                      static_cast<__int128>(coef) * b->second;
        if (nv > kEntryGuard || nv < -kEntryGuard) throw sparse_overflow{};
        int c = a->first;
        if (nv == 0) {
          --cnnz[c];
        } else {
          merged.emplace_back(c, static_cast<long long>(nv));
          if (nv == 1 || nv == -1) heap.push({markowitz(target, c), c, target});
        }
        ++a;
        ++b;
      }
    }
    row[target] = std::move(merged);
    rnnz[target] = static_cast<int>(row[target].size());
  }

  void eliminate(int r, int c, long long pivot) {
    std::vector<int> rows_here;
    rows_here.swap(col_rows[c]);
    std::sort(rows_here.begin(), rows_here.end());
    rows_here.erase(std::unique(rows_here.begin(), rows_here.end()),
                    rows_here.end());
    for (int r2 : rows_here) {
      if (r2 == r || !ralive[r2]) continue;
      long long* w = find(r2, c);
      if (!w) continue;  // stale registration
      // pivot is +-1 so the exact multiplier is w * pivot.
      row_update(r2, r, *w * pivot);
    }
    // Column c now lives only in row r; removing the row finishes the step
    // (the implicit column operations touch row r alone).
    for (auto [c2, v2] : row[r]) --cnnz[c2];
    row[r].clear();
    rnnz[r] = 0;
    ralive[r] = 0;
    calive[c] = 0;
    ++unit_rank;
  }

  void run() {
    while (!heap.empty()) {
      HeapEnt e = heap.top();
      heap.pop();
      if (!ralive[e.r] || !calive[e.c]) continue;
      long long* v = find(e.r, e.c);
      if (!v || (*v != 1 && *v != -1)) continue;
      long long cost = markowitz(e.r, e.c);
      if (cost != e.cost) {
        heap.push({cost, e.c, e.r});
        continue;
      }
      eliminate(e.r, e.c, *v);
    }
  }

  // Residual entries on alive rows, remapped to compact dense indices.
  std::vector<std::vector<bigint>> residual() const {
    std::vector<int> rmap(m, -1), cmap(n, -1);
    int nr = 0, nc = 0;
    for (int r = 0; r < m; ++r)
      if (ralive[r] && !row[r].empty()) rmap[r] = nr++;
    for (int c = 0; c < n; ++c)
      if (calive[c] && cnnz[c] > 0) cmap[c] = nc++;
    if (nr == 0 || nc == 0) return {};
    if (nr > kDenseCap || nc > kDenseCap)
      throw error("smith normal form residual too large (" +
                  std::to_string(nr) + "x" + std::to_string(nc) + ")");
    std::vector<std::vector<bigint>> d(nr, std::vector<bigint>(nc, 0));
    for (int r = 0; r < m; ++r) {
      if (rmap[r] < 0) continue;
      for (auto [c, v] : row[r]) d[rmap[r]][cmap[c]] = v;
    }
    return d;
  }
};

void verify_chain(const std::vector<bigint>& factors) {
  for (std::size_t i = 0; i + 1 < factors.size(); ++i)
    if (factors[i + 1] % factors[i] != 0)
      throw error("invariant factors violate the divisibility chain");
  for (const auto& f : factors)
    if (f <= 0) throw error("invariant factor not positive");
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult res;
  if (m.entries.empty()) return res;

  bool needs_dense_only = false;
  for (const auto& e : m.entries)
    if (e.v > kEntryGuard || e.v < -kEntryGuard) needs_dense_only = true;

  std::vector<bigint> factors;
  bool done = false;
  if (!needs_dense_only) {
    try {
      SparseElim elim(m);
      elim.run();
      factors.assign(static_cast<std::size_t>(elim.unit_rank), bigint(1));
      auto rest = dense_snf(elim.residual());
      factors.insert(factors.end(), rest.begin(), rest.end());
      done = true;
    } catch (const sparse_overflow&) {
      done = false;
    }
  }
  if (!done) {
    if (m.rows > kDenseCap || m.cols > kDenseCap)
      throw error("matrix entries grew past the sparse guard and the matrix "
                  "is too large for the dense fallback");
    factors = dense_snf(m.to_dense());
  }

  verify_chain(factors);
  res.factors = std::move(factors);
  res.rank = static_cast<long long>(res.factors.size());
  return res;
}

long long rank_over_fp(const IntMatrix& m, std::uint32_t p) {
  if (m.rows > kDenseCap || m.cols > kDenseCap)
    throw error("mod-p rank cross-check is limited to small matrices");
  std::vector<std::vector<std::uint32_t>> rows(
      static_cast<std::size_t>(m.rows),
      std::vector<std::uint32_t>(static_cast<std::size_t>(m.cols), 0));
  for (const auto& e : m.entries) {
    long long v = e.v % static_cast<long long>(p);
    if (v < 0) v += p;
    rows[e.r][e.c] = static_cast<std::uint32_t>(v);
  }
  return kernels::rank_mod_p(rows, p);
}

}  // namespace myc
