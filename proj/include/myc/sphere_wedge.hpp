#pragma once

#include <map>
#include <string>

namespace myc {

/// Normal form of the homotopy algebra: either a contractible space or a
/// finite wedge of spheres recorded as dimension -> multiplicity. The
/// (-1)-sphere is the complex consisting of the empty face alone; having no
/// basepoint it may only occur as the sole summand with multiplicity 1.
struct SphereWedge {
  bool is_contractible = false;
  std::map<int, long long> spheres;  // dim >= -1 -> multiplicity >= 1

  static SphereWedge contractible();
  static SphereWedge sphere(int dim, long long mult = 1);

  bool operator==(const SphereWedge& o) const = default;

  /// Total number of sphere summands.
  long long summands() const;

  /// Join of two wedges: contractible absorbs, otherwise dimensions add
  /// plus one and multiplicities multiply (distributivity). Joining with
  /// the (-1)-sphere is the identity, which the dimension arithmetic
  /// produces on its own.
  static SphereWedge join(const SphereWedge& a, const SphereWedge& b);

  /// r-fold suspension (r >= 0): shifts every dimension up by r.
  static SphereWedge suspend(const SphereWedge& w, long long r);

  /// Wedge sum. Contractible is the identity; the (-1)-sphere next to any
  /// other summand raises invalid_wedge_error.
  static SphereWedge wedge(const SphereWedge& a, const SphereWedge& b);

  /// "S^1 v S^1" with the requested join symbol; multiplicities above
  /// `expand_limit` print as a count prefix. Deterministic, ascending dims.
  std::string to_string(bool ascii = false) const;

  void check_valid() const;  // enforces the (-1)-sphere constraint
};

}  // namespace myc
