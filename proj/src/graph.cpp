#include "myc/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "myc/errors.hpp"

namespace myc {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw error("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw error("loop edge " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw error("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw error("duplicate edge");

  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.words = n <= 64 ? 1 : (n + 63) / 64;
  g.adj.assign(std::size_t(g.n) * g.words, 0);
  for (auto [u, v] : g.edges) {
    g.adj[std::size_t(u) * g.words + v / 64] |= std::uint64_t(1) << (v % 64);
    g.adj[std::size_t(v) * g.words + u / 64] |= std::uint64_t(1) << (u % 64);
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  return (neighbors(u)[v / 64] >> (v % 64)) & 1;
}

int Graph::degree(int v) const {
  int d = 0;
  const std::uint64_t* row = neighbors(v);
  for (int w = 0; w < words; ++w) d += __builtin_popcountll(row[w]);
  return d;
}

Graph path(int n) {
  if (n < 1) throw error("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(e));
}

Graph cycle(int n) {
  if (n < 3) throw error("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph::from_edges(n, std::move(e));
}

Graph complete(int n) {
  if (n < 1) throw error("complete graph needs at least 1 vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, std::move(e));
}

Graph grid(int rows, int cols) {
  if (rows < 1 || cols < 1) throw error("grid needs positive dimensions");
  auto id = [cols](int r, int c) { return r * cols + c; };
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) e.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph::from_edges(rows * cols, std::move(e));
}

Graph categorical_product(const Graph& g, const Graph& h) {
  const int hn = h.n;
  std::vector<std::pair<int, int>> e;
  for (auto [u, x] : g.edges)
    for (auto [v, y] : h.edges) {
      e.emplace_back(u * hn + v, x * hn + y);
      e.emplace_back(u * hn + y, x * hn + v);
    }
  return Graph::from_edges(g.n * hn, std::move(e));
}

Graph kronecker_cover(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges) {
    e.emplace_back(u, v + g.n);
    e.emplace_back(v, u + g.n);
  }
  return Graph::from_edges(2 * g.n, std::move(e));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<std::pair<int, int>> e = g.edges;
  for (auto [u, v] : h.edges) e.emplace_back(u + g.n, v + g.n);
  return Graph::from_edges(g.n + h.n, std::move(e));
}

Graph mycielskian(const Graph& g, int l) {
  if (l < 0) throw error("mycielskian needs l >= 0");
  const int n = g.n;
  const int apex = n * (l + 1);
  auto at = [n](int v, int layer) { return (layer - 1) * n + v; };  // layer 1..l+1

  std::vector<std::pair<int, int>> e;
  // bipartite double of E(G) between consecutive layers
  for (int i = 1; i <= l; ++i)
    for (auto [u, v] : g.edges) {
      e.emplace_back(at(u, i), at(v, i + 1));
      e.emplace_back(at(v, i), at(u, i + 1));
    }
  // copy of G on the last layer
  for (auto [u, v] : g.edges) e.emplace_back(at(u, l + 1), at(v, l + 1));
  // apex joined to layer 1
  for (int v = 0; v < n; ++v) e.emplace_back(at(v, 1), apex);
  return Graph::from_edges(apex + 1, std::move(e));
}

Graph iterated_mycielskian(const Graph& g, int l, int r) {
  if (r < 0) throw error("iterated mycielskian needs r >= 0");
  Graph cur = g;
  for (int i = 0; i < r; ++i) cur = mycielskian(cur, l);
  return cur;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n, -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < g.n; ++v) {
        if (!g.has_edge(u, v)) continue;
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::string canonical_hash(const Graph& g) {
  // FNV-1a over a canonical byte rendering of (n, edges).
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.n));
  mix(static_cast<std::uint64_t>(g.edges.size()));
  for (auto [u, v] : g.edges) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

Graph read_edge_list(std::istream& in) {
  auto fail = [](int line, const std::string& msg) -> void {
    throw parse_error("line " + std::to_string(line) + ": " + msg,
                      static_cast<std::size_t>(line));
  };

  std::string text;
  int lineno = 0;
  if (!std::getline(in, text)) fail(1, "missing header 'n m'");
  ++lineno;
  int n = 0;
  long long m = 0;
  {
    std::istringstream ls(text);
    std::string extra;
    if (!(ls >> n >> m) || (ls >> extra))
      fail(lineno, "expected header 'n m'");
    if (n < 0 || m < 0) fail(lineno, "negative count in header");
  }

  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> seen;  // lazily sized below
  seen.assign(n, {});
  for (long long k = 0; k < m; ++k) {
    if (!std::getline(in, text))
      fail(lineno + 1, "expected " + std::to_string(m) + " edges, got " +
                           std::to_string(k));
    ++lineno;
    std::istringstream ls(text);
    int u, v;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) fail(lineno, "expected edge 'u v'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(lineno, "vertex out of range in edge " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) fail(lineno, "loop edge " + std::to_string(u) + " " +
                                 std::to_string(v));
    int a = std::min(u, v), b = std::max(u, v);
    if (seen[a].empty()) seen[a].assign(n, false);
    if (seen[a][b]) fail(lineno, "duplicate edge " + std::to_string(u) + " " +
                                     std::to_string(v));
    seen[a][b] = true;
    edges.emplace_back(a, b);
  }
  return Graph::from_edges(n, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace myc
