#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

namespace elliptica {

/// 113-bit binary floating point for escalated reruns.
using Quad = boost::multiprecision::float128;

/// 50 decimal digits for oracles whose cancellation exceeds quad.
using Wide = boost::multiprecision::cpp_bin_float_50;

}  // namespace elliptica
