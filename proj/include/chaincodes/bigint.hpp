#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chaincodes {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

inline BigInt pow2(unsigned e) { return BigInt{1} << e; }

}  // namespace chaincodes
