#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace myc {

/// Arbitrary-precision signed integer used wherever entry growth is
/// unbounded (Smith normal form, torsion coefficients).
using bigint = boost::multiprecision::cpp_int;

}  // namespace myc
