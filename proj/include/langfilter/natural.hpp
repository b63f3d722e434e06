#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace langfilter {

// Arbitrary-width non-negative integer used for filter steps, offsets and
// matrix exponents.
using Natural = boost::multiprecision::cpp_int;

}  // namespace langfilter
