#include "myc/homology.hpp"

#include <sstream>

#include "myc/errors.hpp"
#include "myc/matrix.hpp"
#include "myc/snf.hpp"

namespace myc {

bool HomologyProfile::torsion_free() const {
  for (const auto& [d, g] : groups)
    if (!g.torsion.empty()) return false;
  return true;
}

std::string HomologyProfile::to_string(bool ascii) const {
  if (groups.empty()) return "0";
  const char* oplus = ascii ? " + " : " ⊕ ";
  std::ostringstream os;
  bool first_group = true;
  for (const auto& [d, g] : groups) {
    if (g.trivial()) continue;
    if (!first_group) os << "; ";
    first_group = false;
    os << "H~" << d << ": ";
    bool first_term = true;
    if (g.free_rank > 0) {
      os << "Z";
      if (g.free_rank > 1) os << "^" << g.free_rank;
      first_term = false;
    }
    for (const bigint& t : g.torsion) {
      if (!first_term) os << oplus;
      first_term = false;
      os << "Z/" << t;
    }
  }
  if (first_group) return "0";
  return os.str();
}

HomologyProfile reduced_homology(const SimplicialComplex& k) {
  if (k.is_void())
    throw error("reduced homology of the void complex is undefined here");
  if (!k.contains_empty_face)
    throw error("complex is missing the empty face");

  const int top = k.top_dim();

  // Chain ranks with the empty face in degree -1.
  auto chain_rank = [&](int d) -> long long {
    if (d == -1) return 1;
    if (d < -1 || d > top) return 0;
    return k.count(d);
  };

  // Smith data of every boundary map from degree 0 (vertices -> empty face)
  // through top+1 (the zero map out of nothing).
  std::map<int, SnfResult> snf;  // d -> SNF of boundary in degree d
  for (int d = 0; d <= top + 1; ++d)
    snf[d] = smith_normal_form(boundary_matrix(k, d));

  auto rank_of = [&](int d) -> long long {
    if (d < 0 || d > top + 1) return 0;  // maps out of degree -1 are zero
    return snf[d].rank;
  };

  HomologyProfile profile;
  for (int d = -1; d <= top; ++d) {
    HomologyGroup g;
    g.free_rank = chain_rank(d) - rank_of(d) - rank_of(d + 1);
    if (g.free_rank < 0) throw error("negative Betti number: rank bug");
    if (d + 1 <= top + 1) {
      for (const bigint& f : snf[d + 1].factors)
        if (f > 1) g.torsion.push_back(f);
    }
    if (!g.trivial()) profile.groups[d] = g;
  }

  // Cross-check: the alternating sum of Betti numbers must equal the
  // combinatorial reduced Euler characteristic (torsion cancels).
  long long euler_from_betti = 0;
  for (int d = -1; d <= top; ++d) {
    long long b = 0;
    auto it = profile.groups.find(d);
    if (it != profile.groups.end()) b = it->second.free_rank;
    euler_from_betti += (d % 2 == 0 ? b : -b);
  }
  if (euler_from_betti != euler_characteristic(k))
    throw error("Euler characteristic mismatch: Betti numbers inconsistent");

  return profile;
}

HomologyProfile profile_of_sphere_wedge(const SphereWedge& w) {
  w.check_valid();
  HomologyProfile p;
  if (w.is_contractible) return p;
  for (const auto& [d, m] : w.spheres) p.groups[d].free_rank = m;
  return p;
}

SphereWedge profile_to_sphere_wedge(const HomologyProfile& p) {
  if (!p.torsion_free())
    throw torsion_error("profile has torsion, no wedge of spheres matches",
                        p.to_string(true));
  if (p.trivial()) return SphereWedge::contractible();
  SphereWedge w;
  for (const auto& [d, g] : p.groups) {
    if (g.free_rank <= 0) throw error("profile group without free rank");
    w.spheres[d] = g.free_rank;
  }
  w.check_valid();
  return w;
}

}  // namespace myc
