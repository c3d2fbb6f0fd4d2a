#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "myc/graph.hpp"

namespace myc {

inline constexpr long long kDefaultFaceBudget = 2'000'000;

/// Abstract simplicial complex on vertices 0..n_vertices-1, stored
/// exhaustively. Faces of dimension d live in faces[d] as bitmasks of
/// `words` 64-bit words each, sorted lexicographically as vertex tuples.
/// The empty face is tracked by flag; a complex without it is the void
/// complex and carries no other faces.
struct SimplicialComplex {
  int n_vertices = 0;
  int words = 1;
  bool contains_empty_face = false;
  std::vector<std::vector<std::uint64_t>> faces;  // faces[d], flat, count*words

  bool is_void() const { return !contains_empty_face; }
  int top_dim() const { return static_cast<int>(faces.size()) - 1; }
  long long count(int d) const {
    if (d < 0 || d > top_dim()) return 0;
    return static_cast<long long>(faces[d].size() / words);
  }
  const std::uint64_t* face(int d, long long i) const {
    return faces[d].data() + static_cast<std::size_t>(i) * words;
  }
  /// All faces including the empty one.
  long long total_faces() const;
};

/// Compares two same-size vertex sets as increasing tuples.
bool face_lex_less(const std::uint64_t* a, const std::uint64_t* b, int words);

/// Independence complex of g: faces are the independent vertex sets.
/// Dimension of a face = cardinality - 1. Throws resource_error naming the
/// face count reached when the budget is exceeded.
SimplicialComplex independence_complex(const Graph& g,
                                       long long max_faces = kDefaultFaceBudget);

/// One fold step deletes v when N(u) is contained in N(v), which preserves
/// the homotopy type of the independence complex.
struct FoldLog {
  // (kept u, deleted v) in original labels, in deletion order.
  std::vector<std::pair<int, int>> steps;
  long long removed() const { return static_cast<long long>(steps.size()); }
};

struct FoldResult {
  Graph graph;
  FoldLog log;
};

/// Repeatedly finds the lexicographically first ordered pair (u, v), u != v,
/// with N(u) contained in N(v) and deletes v (ties delete the larger label),
/// until no pair remains. Deterministic.
FoldResult fold_reduce(const Graph& g);

/// Reduced Euler characteristic, counting the empty face with sign -1.
/// Rejects the void complex.
long long euler_characteristic(const SimplicialComplex& k);

/// Debug dump: one face per line as space-separated sorted vertices, blank
/// line between dimensions. The empty face is implicit.
std::string complex_to_text(const SimplicialComplex& k);

}  // namespace myc
