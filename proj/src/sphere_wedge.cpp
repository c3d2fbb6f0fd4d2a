#include "myc/sphere_wedge.hpp"

#include <sstream>

#include "myc/checked.hpp"
#include "myc/errors.hpp"

namespace myc {

SphereWedge SphereWedge::contractible() {
  SphereWedge w;
  w.is_contractible = true;
  return w;
}

SphereWedge SphereWedge::sphere(int dim, long long mult) {
  if (dim < -1) throw error("sphere dimension below -1");
  if (mult <= 0) throw error("sphere multiplicity must be positive");
  SphereWedge w;
  w.spheres[dim] = mult;
  w.check_valid();
  return w;
}

long long SphereWedge::summands() const {
  long long total = 0;
  for (const auto& [d, m] : spheres) total = checked_add(total, m);
  return total;
}

void SphereWedge::check_valid() const {
  if (is_contractible) {
    if (!spheres.empty()) throw error("contractible wedge carries spheres");
    return;
  }
  if (spheres.empty()) throw error("empty sphere list is not a valid wedge");
  for (const auto& [d, m] : spheres) {
    if (d < -1) throw error("sphere dimension below -1");
    if (m <= 0) throw error("sphere multiplicity must be positive");
  }
  auto it = spheres.find(-1);
  if (it != spheres.end()) {
    if (it->second != 1 || spheres.size() != 1)
      throw invalid_wedge_error(
          "the (-1)-sphere cannot be wedged with other summands");
  }
}

SphereWedge SphereWedge::join(const SphereWedge& a, const SphereWedge& b) {
  a.check_valid();
  b.check_valid();
  if (a.is_contractible || b.is_contractible) return contractible();
  SphereWedge out;
  for (const auto& [da, ma] : a.spheres) {
    for (const auto& [db, mb] : b.spheres) {
      int d = da + db + 1;
      long long& slot = out.spheres[d];
      slot = checked_add(slot, checked_mul(ma, mb));
    }
  }
  out.check_valid();
  return out;
}

SphereWedge SphereWedge::suspend(const SphereWedge& w, long long r) {
  w.check_valid();
  if (r < 0) throw error("negative suspension count");
  if (w.is_contractible) return contractible();
  if (r == 0) return w;
  SphereWedge out;
  for (const auto& [d, m] : w.spheres) {
    long long nd = checked_add(static_cast<long long>(d), r);
    if (nd > 1'000'000'000LL) throw error("suspension dimension overflow");
    out.spheres[static_cast<int>(nd)] = m;
  }
  out.check_valid();
  return out;
}

SphereWedge SphereWedge::wedge(const SphereWedge& a, const SphereWedge& b) {
  a.check_valid();
  b.check_valid();
  if (a.is_contractible) return b;
  if (b.is_contractible) return a;
  SphereWedge out = a;
  for (const auto& [d, m] : b.spheres) {
    long long& slot = out.spheres[d];
    slot = checked_add(slot, m);
  }
  out.check_valid();  // rejects a (-1)-sphere wedged with anything else
  return out;
}

std::string SphereWedge::to_string(bool ascii) const {
  check_valid();
  if (is_contractible) return ascii ? "pt" : "pt";
  const char* vee = ascii ? " v " : " ∨ ";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, m] : spheres) {
    for (long long i = 0; i < m; ++i) {
      if (m > 4) break;  // large multiplicities summarized below
      if (!first) os << vee;
      first = false;
      if (ascii)
        os << "S(" << d << ")";
      else
        os << "S^" << d;
    }
    if (m > 4) {
      if (!first) os << vee;
      first = false;
      if (ascii)
        os << m << "*S(" << d << ")";
      else
        os << m << "·S^" << d;
    }
  }
  return os.str();
}

}  // namespace myc
