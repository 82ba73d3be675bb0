#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace milnor {

/// Exact arbitrary-precision integer; the default coefficient ring.
using Integer = boost::multiprecision::cpp_int;

}  // namespace milnor
