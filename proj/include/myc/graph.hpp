#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace myc {

/// Simple undirected graph on vertices 0..n-1. Immutable once built: the
/// constructors normalize edges to u < v, reject loops and duplicates, and
/// precompute adjacency bitmasks (row-major, `words` 64-bit words per row).
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // sorted, u < v, unique

  int words = 1;
  std::vector<std::uint64_t> adj;  // n * words

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  const std::uint64_t* neighbors(int v) const { return adj.data() + std::size_t(v) * words; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  long long edge_count() const { return static_cast<long long>(edges.size()); }
};

// --- families -------------------------------------------------------------

Graph path(int n);      // n >= 1 vertices, edges i - i+1
Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph grid(int rows, int cols);  // rows*cols vertices, 4-neighbor lattice

// --- operations -------------------------------------------------------------

/// Categorical (tensor) product: (u,v) ~ (x,y) iff u~x and v~y.
/// Vertex (u,v) gets label u*|V(H)| + v.
Graph categorical_product(const Graph& g, const Graph& h);

/// Bipartite double cover, i.e. the categorical product with a single edge.
/// Vertex (v,s) gets label v + s*|V(G)| for s in {0,1}.
Graph kronecker_cover(const Graph& g);

/// Disjoint union; vertices of h are shifted past those of g.
Graph disjoint_union(const Graph& g, const Graph& h);

/// Generalized Mycielskian with l+1 layers plus an apex. Layer i in 1..l+1
/// holds a copy of V(G); vertex (v,i) gets label (i-1)*|V(G)| + v and the
/// apex w = |V(G)|*(l+1) comes last. Consecutive layers carry the bipartite
/// double of E(G), the last layer carries E(G) itself, and w is joined to
/// layer 1. l = 0 degenerates to the cone over G.
Graph mycielskian(const Graph& g, int l);

/// mycielskian applied r times (r >= 0; r = 0 returns g).
Graph iterated_mycielskian(const Graph& g, int l, int r);

bool is_bipartite(const Graph& g);

/// Stable hex digest of (n, sorted edge list); identical labeled graphs hash
/// equal on every platform.
std::string canonical_hash(const Graph& g);

// --- edge-list text format ---------------------------------------------------
//
// First line "n m", then m lines "u v". The reader rejects loops, duplicate
// edges, out-of-range labels and malformed lines with a diagnostic naming the
// 1-based line.

Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace myc
