#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace compavoid {

// All counting is exact; coefficients can exceed 64 bits well before the
// configured truncation caps, so everything runs on arbitrary precision.
using Int = boost::multiprecision::cpp_int;

}  // namespace compavoid
