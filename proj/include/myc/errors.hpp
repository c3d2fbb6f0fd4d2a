#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace myc {

/// Base class for all toolkit errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// An enumeration or reduction ran past its configured budget.
/// `faces_reached` records how far it got before giving up.
class resource_error : public error {
 public:
  resource_error(const std::string& what_arg, long long reached)
      : error(what_arg), faces_reached(reached) {}
  long long faces_reached;
};

/// Input text could not be parsed. `position` is a 0-based character index
/// into the offending string.
class parse_error : public error {
 public:
  parse_error(const std::string& what_arg, std::size_t pos)
      : error(what_arg), position(pos) {}
  std::size_t position;
};

/// An expression atom had no binding when a numeric value was required.
class unbound_atom_error : public error {
 public:
  explicit unbound_atom_error(const std::string& name)
      : error("unbound atom '" + name + "' in expression"), atom(name) {}
  std::string atom;
};

/// The (-1)-sphere (the complex consisting of the empty face alone) has no
/// basepoint, so it cannot appear as one summand of a larger wedge.
class invalid_wedge_error : public error {
 public:
  explicit invalid_wedge_error(const std::string& what_arg) : error(what_arg) {}
};

/// A homology profile that was required to be torsion-free carried torsion.
class torsion_error : public error {
 public:
  torsion_error(const std::string& what_arg, std::string profile_str)
      : error(what_arg), profile(std::move(profile_str)) {}
  std::string profile;
};

}  // namespace myc
