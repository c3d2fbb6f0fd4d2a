#include "myc/complex.hpp"

#include <algorithm>
#include <sstream>

#include "myc/errors.hpp"
#include "myc/kernels/kernels.hpp"

namespace myc {

long long SimplicialComplex::total_faces() const {
  long long t = contains_empty_face ? 1 : 0;
  for (int d = 0; d <= top_dim(); ++d) t += count(d);
  return t;
}

bool face_lex_less(const std::uint64_t* a, const std::uint64_t* b, int words) {
  // Increasing tuples of equal size: the lowest differing bit decides, and
  // the set containing it has the smaller tuple.
  for (int w = 0; w < words; ++w) {
    std::uint64_t diff = a[w] ^ b[w];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a[w] & low) != 0;
    }
  }
  return false;
}

namespace {

struct Enumerator {
  const Graph& g;
  const kernels::KernelTable& K;
  long long budget;
  long long emitted = 1;  // the empty face
  SimplicialComplex out;
  std::vector<std::uint64_t> cur;

  explicit Enumerator(const Graph& graph, long long max_faces)
      : g(graph), K(kernels::active_kernels()), budget(max_faces) {
    out.n_vertices = g.n;
    out.words = g.words;
    out.contains_empty_face = true;
    cur.assign(g.words, 0);
    if (budget < 1)
      throw resource_error("face budget exceeded after 1 face", 1);
  }

  bool independent_with_current(int v) const {
    const std::uint64_t* row = g.neighbors(v);
    if (g.words == 1) return (row[0] & cur[0]) == 0;
    return !K.masks_intersect(row, cur.data(), static_cast<std::size_t>(g.words));
  }

  void emit(int depth) {
    if (++emitted > budget)
      throw resource_error(
          "face budget exceeded after " + std::to_string(emitted) + " faces",
          emitted);
    if (static_cast<int>(out.faces.size()) <= depth) out.faces.resize(depth + 1);
    out.faces[depth].insert(out.faces[depth].end(), cur.begin(), cur.end());
  }

  // Depth-first over vertices in increasing order; preorder emission keeps
  // every dimension's face list in lexicographic order.
  void extend(int start, int depth) {
    for (int v = start; v < g.n; ++v) {
      if (!independent_with_current(v)) continue;
      cur[v / 64] |= std::uint64_t(1) << (v % 64);
      emit(depth);
      extend(v + 1, depth + 1);
      cur[v / 64] &= ~(std::uint64_t(1) << (v % 64));
    }
  }
};

}  // namespace

SimplicialComplex independence_complex(const Graph& g, long long max_faces) {
  Enumerator e(g, max_faces);
  e.extend(0, 0);
  return std::move(e.out);
}

FoldResult fold_reduce(const Graph& g) {
  const kernels::KernelTable& K = kernels::active_kernels();
  FoldResult res;
  res.graph = g;
  std::vector<int> orig(g.n);
  for (int i = 0; i < g.n; ++i) orig[i] = i;

  while (true) {
    const Graph& cur = res.graph;
    int del = -1, keep = -1;
    for (int u = 0; u < cur.n && del < 0; ++u)
      for (int v = 0; v < cur.n; ++v) {
        if (v == u) continue;
        if (K.mask_subset(cur.neighbors(u), cur.neighbors(v),
                          static_cast<std::size_t>(cur.words))) {
          keep = u;
          del = v;
          break;
        }
      }
    if (del < 0) break;

    res.log.steps.emplace_back(orig[keep], orig[del]);
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : cur.edges) {
      if (a == del || b == del) continue;
      edges.emplace_back(a > del ? a - 1 : a, b > del ? b - 1 : b);
    }
    res.graph = Graph::from_edges(cur.n - 1, std::move(edges));
    orig.erase(orig.begin() + del);
  }
  return res;
}

long long euler_characteristic(const SimplicialComplex& k) {
  if (k.is_void())
    throw error("euler characteristic of the void complex is undefined");
  long long chi = -1;  // empty face
  for (int d = 0; d <= k.top_dim(); ++d)
    chi += (d % 2 == 0) ? k.count(d) : -k.count(d);
  return chi;
}

std::string complex_to_text(const SimplicialComplex& k) {
  std::ostringstream out;
  for (int d = 0; d <= k.top_dim(); ++d) {
    if (d > 0) out << '\n';
    for (long long i = 0; i < k.count(d); ++i) {
      const std::uint64_t* f = k.face(d, i);
      bool first = true;
      for (int v = 0; v < k.n_vertices; ++v)
        if ((f[v / 64] >> (v % 64)) & 1) {
          if (!first) out << ' ';
          out << v;
          first = false;
        }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace myc
