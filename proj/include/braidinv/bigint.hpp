#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace braidinv {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace braidinv
