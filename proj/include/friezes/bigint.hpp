#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace friezes {

/// Exact arbitrary-precision integer used for all frieze entries and
/// growth coefficients. No floating point appears anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace friezes
