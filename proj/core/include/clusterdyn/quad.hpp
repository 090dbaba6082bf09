#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace clusterdyn {

/// IEEE binary128-equivalent float (113-bit significand) for float mode.
using Quad = boost::multiprecision::cpp_bin_float_quad;

}  // namespace clusterdyn
