#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symbreak {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace symbreak
