#pragma once

#include <map>
#include <string>
#include <vector>

#include "myc/bigint.hpp"
#include "myc/complex.hpp"
#include "myc/sphere_wedge.hpp"

namespace myc {

/// One reduced homology group: Z^free_rank (+) Z/t1 (+) Z/t2 (+) ...
/// Torsion orders are the invariant factors > 1 in divisibility order.
struct HomologyGroup {
  long long free_rank = 0;
  std::vector<bigint> torsion;

  bool operator==(const HomologyGroup& o) const = default;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

/// Reduced integral homology, degree -> group; trivial degrees are absent.
/// The empty profile is the signature of a contractible-like space (all
/// reduced homology vanishing).
struct HomologyProfile {
  std::map<int, HomologyGroup> groups;

  bool operator==(const HomologyProfile& o) const = default;
  bool trivial() const { return groups.empty(); }
  bool torsion_free() const;

  /// "H~1: Z^2; H~3: Z (+) Z/2" (ascii) / with real (+) glyph otherwise;
  /// trivial profile renders as "0".
  std::string to_string(bool ascii = false) const;
};

/// Reduced homology of a complex over the integers, computed from boundary
/// matrices and their Smith normal forms. Degree -1 is included: it is Z
/// exactly when the complex is the empty face alone. Throws on the void
/// complex (no faces at all), whose chain complex is degenerate. Every call
/// cross-checks the alternating Betti sum against the combinatorial Euler
/// characteristic.
HomologyProfile reduced_homology(const SimplicialComplex& k);

/// Expected homology of a wedge of spheres: Z^m in degree d per m copies
/// of S^d, no torsion. Contractible -> trivial profile.
HomologyProfile profile_of_sphere_wedge(const SphereWedge& w);

/// Inverse of the above for torsion-free profiles. Throws torsion_error if
/// any torsion is present (no wedge of spheres has torsion) and error if a
/// (-1)-sphere would have to appear with company.
SphereWedge profile_to_sphere_wedge(const HomologyProfile& p);

}  // namespace myc
