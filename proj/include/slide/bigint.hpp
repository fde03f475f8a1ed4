#ifndef SLIDE_BIGINT_HPP
#define SLIDE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace slide {

// Exact integer coefficients everywhere; no floating point in this library.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace slide

#endif
