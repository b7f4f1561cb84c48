#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ncolor {

/// Exact counts. Unrestricted totals grow like every-other Fibonacci and
/// overflow 64 bits near n = 45, so all counting is arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace ncolor
