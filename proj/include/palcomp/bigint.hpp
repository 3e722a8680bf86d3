#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace palcomp {

using BigInt = boost::multiprecision::cpp_int;

} // namespace palcomp
