#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "myc/complex.hpp"
#include "myc/errors.hpp"
#include "myc/graph.hpp"
#include "myc/homology.hpp"
#include "myc/matrix.hpp"
#include "myc/snf.hpp"

#include "oracles.hpp"

using myc::bigint;
using myc::Graph;
using myc::HomologyProfile;
using myc::independence_complex;
using myc::IntMatrix;
using myc::reduced_homology;
using myc::SimplicialComplex;

namespace {

HomologyProfile sphere_profile(int dim, long long mult = 1) {
  HomologyProfile p;
  p.groups[dim].free_rank = mult;
  return p;
}

}  // namespace

TEST_CASE("boundary matrices: degree 0 maps vertices to the empty face") {
  SimplicialComplex k = independence_complex(myc::complete(3));
  IntMatrix d0 = myc::boundary_matrix(k, 0);
  CHECK(d0.rows == 1);
  CHECK(d0.cols == 3);
  CHECK(d0.entries.size() == 3);
  for (const auto& e : d0.entries) CHECK(e.v == 1);
}

TEST_CASE("boundary matrices: alternating signs on an edge") {
  SimplicialComplex k = independence_complex(myc::cycle(4));
  IntMatrix d1 = myc::boundary_matrix(k, 1);
  CHECK(d1.rows == 4);
  CHECK(d1.cols == 2);  // {0,2} and {1,3}
  // each column has one +1 and one -1
  std::vector<long long> colsum(2, 0), colabs(2, 0);
  for (const auto& e : d1.entries) {
    colsum[e.c] += e.v;
    colabs[e.c] += e.v > 0 ? e.v : -e.v;
  }
  CHECK(colsum == std::vector<long long>{0, 0});
  CHECK(colabs == std::vector<long long>{2, 2});
}

TEST_CASE("boundary composite vanishes on sample complexes") {
  CHECK(myc::boundary_squares_to_zero(independence_complex(myc::cycle(5))));
  CHECK(myc::boundary_squares_to_zero(independence_complex(myc::path(7))));
  CHECK(myc::boundary_squares_to_zero(
      independence_complex(myc::mycielskian(myc::complete(2), 2))));
  CHECK(myc::boundary_squares_to_zero(testutil::projective_plane()));
}

TEST_CASE("smith normal form: textbook example") {
  IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
  myc::SnfResult s = myc::smith_normal_form(m);
  CHECK(s.rank == 2);
  CHECK(s.factors == std::vector<bigint>{2, 4});
}

TEST_CASE("smith normal form: zero and identity") {
  CHECK(myc::smith_normal_form(IntMatrix::from_rows({{0, 0}, {0, 0}})).rank == 0);
  myc::SnfResult id = myc::smith_normal_form(IntMatrix::from_rows({{1, 0}, {0, 1}}));
  CHECK(id.rank == 2);
  CHECK(id.factors == std::vector<bigint>{1, 1});
}

TEST_CASE("smith normal form: agrees with the minor-gcd definition") {
  testutil::Rng rng(777);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + int(rng.below(5));
    const int cols = 1 + int(rng.below(5));
    IntMatrix m = testutil::random_matrix(rng, rows, cols, 60, -9, 9);
    myc::SnfResult s = myc::smith_normal_form(m);
    const auto oracle = testutil::snf_by_minors(m.to_dense());
    CHECK(s.factors == oracle);
    CHECK(s.rank == static_cast<long long>(oracle.size()));
  }
}

TEST_CASE("smith normal form: invariant under row/column permutation") {
  testutil::Rng rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const int rows = 2 + int(rng.below(5));
    const int cols = 2 + int(rng.below(5));
    IntMatrix m = testutil::random_matrix(rng, rows, cols, 50, -20, 20);
    std::vector<int> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    for (int i = rows - 1; i > 0; --i) std::swap(rp[i], rp[rng.below(i + 1)]);
    for (int i = cols - 1; i > 0; --i) std::swap(cp[i], cp[rng.below(i + 1)]);
    IntMatrix p = m;
    for (auto& e : p.entries) {
      e.r = rp[e.r];
      e.c = cp[e.c];
    }
    CHECK(myc::smith_normal_form(m).factors ==
          myc::smith_normal_form(p).factors);
  }
}

TEST_CASE("rank over F_p matches integer rank away from bad primes") {
  testutil::Rng rng(2025);
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix m = testutil::random_matrix(rng, 2 + int(rng.below(5)),
                                          2 + int(rng.below(5)), 50, -9, 9);
    myc::SnfResult s = myc::smith_normal_form(m);
    const std::uint32_t p = 32749;
    bool p_divides_a_factor = false;
    for (const bigint& f : s.factors)
      if (f % p == 0) p_divides_a_factor = true;
    const long long fp = myc::rank_over_fp(m, p);
    CHECK(fp <= s.rank);
    if (!p_divides_a_factor) CHECK(fp == s.rank);
  }
}

TEST_CASE("reduced homology: spheres from independence complexes") {
  CHECK(reduced_homology(independence_complex(myc::cycle(5))) ==
        sphere_profile(1));
  CHECK(reduced_homology(independence_complex(myc::complete(3))) ==
        sphere_profile(0, 2));
  CHECK(reduced_homology(independence_complex(myc::cycle(4))) ==
        sphere_profile(0));
  CHECK(reduced_homology(independence_complex(myc::cycle(6))) ==
        sphere_profile(1, 2));
  CHECK(reduced_homology(independence_complex(myc::path(4))).trivial());
  CHECK(reduced_homology(independence_complex(myc::path(7))).trivial());
}

TEST_CASE("reduced homology: degree -1 appears only for the empty-face complex") {
  HomologyProfile p =
      reduced_homology(independence_complex(Graph::from_edges(0, {})));
  CHECK(p == sphere_profile(-1));
  // A single vertex is a cone: no homology anywhere, including degree -1.
  CHECK(reduced_homology(independence_complex(Graph::from_edges(1, {}))).trivial());
}

TEST_CASE("reduced homology: rejects the void complex") {
  SimplicialComplex v;
  v.contains_empty_face = false;
  CHECK_THROWS_AS(reduced_homology(v), myc::error);
}

TEST_CASE("reduced homology: torsion of the projective plane") {
  HomologyProfile p = reduced_homology(testutil::projective_plane());
  CHECK(p.groups.size() == 1);
  REQUIRE(p.groups.count(1) == 1);
  CHECK(p.groups[1].free_rank == 0);
  CHECK(p.groups[1].torsion == std::vector<bigint>{2});
  CHECK_FALSE(p.torsion_free());
  CHECK_THROWS_AS(myc::profile_to_sphere_wedge(p), myc::torsion_error);
  CHECK(p.to_string(true) == "H~1: Z/2");
}

TEST_CASE("reduced homology: invariant under graph relabeling") {
  testutil::Rng rng(1618);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + int(rng.below(6));
    Graph g = testutil::random_graph(rng, n, 40);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<std::pair<int, int>> relabeled;
    for (auto [u, v] : g.edges)
      relabeled.emplace_back(std::min(perm[u], perm[v]),
                             std::max(perm[u], perm[v]));
    Graph h = Graph::from_edges(n, std::move(relabeled));
    CHECK(reduced_homology(independence_complex(g)) ==
          reduced_homology(independence_complex(h)));
  }
}

TEST_CASE("profile strings") {
  HomologyProfile p;
  CHECK(p.to_string(true) == "0");
  p.groups[1].free_rank = 2;
  CHECK(p.to_string(true) == "H~1: Z^2");
  p.groups[3].free_rank = 1;
  p.groups[3].torsion = {2, 6};
  CHECK(p.to_string(true) == "H~1: Z^2; H~3: Z + Z/2 + Z/6");
  CHECK(p.to_string(false).find("⊕") != std::string::npos);
}

TEST_CASE("profile <-> sphere wedge round trips") {
  myc::SphereWedge w = myc::SphereWedge::sphere(2, 3);
  w = myc::SphereWedge::wedge(w, myc::SphereWedge::sphere(0, 1));
  HomologyProfile p = myc::profile_of_sphere_wedge(w);
  CHECK(p.groups[2].free_rank == 3);
  CHECK(p.groups[0].free_rank == 1);
  CHECK(myc::profile_to_sphere_wedge(p) == w);

  CHECK(myc::profile_of_sphere_wedge(myc::SphereWedge::contractible()).trivial());
  CHECK(myc::profile_to_sphere_wedge(HomologyProfile{}) ==
        myc::SphereWedge::contractible());
  // the (-1)-sphere maps to degree -1 and back
  CHECK(myc::profile_to_sphere_wedge(sphere_profile(-1)) ==
        myc::SphereWedge::sphere(-1));
}

TEST_CASE("euler characteristic equals the alternating Betti sum") {
  testutil::Rng rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + int(rng.below(8));
    Graph g = testutil::random_graph(rng, n, 10 + int(rng.below(70)));
    SimplicialComplex k = independence_complex(g);
    HomologyProfile p = reduced_homology(k);
    long long alt = 0;
    for (const auto& [d, grp] : p.groups)
      alt += (d % 2 == 0 ? 1 : -1) * grp.free_rank;
    CHECK(alt == myc::euler_characteristic(k));
    CHECK(myc::euler_characteristic(k) == testutil::reduced_euler_by_scan(g));
  }
}
