#pragma once

#include <complex>

#include "doctest.h"
#include "elliptica/complex_math.hpp"
#include "elliptica/theta.hpp"

namespace test {

using elliptica::cplx;

inline elliptica::ThetaContext<double> context(cplx p) {
  return elliptica::ThetaContext<double>(elliptica::Nome<double>(p));
}

inline double rel(cplx a, cplx b) { return elliptica::relative_error(a, b); }

}  // namespace test

#define CHECK_CLOSE(a, b, tol) CHECK(test::rel((a), (b)) <= (tol))
