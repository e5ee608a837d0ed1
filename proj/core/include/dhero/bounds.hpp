#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dhero {

using BigInt = boost::multiprecision::cpp_int;

/// Cluster size: f(1) = 1, f(t) = 1 + f(t-1)(1 + f(t-1)).
BigInt bound_f(int t);

/// phi(c,h,t) = h + h(h+1)(c + phi(c,h,t-1)) + ch + c with
/// phi(c,h,1) = (2h(h+1))^(2c+1).
BigInt bound_phi(int c, int h, int t);

/// K(c,h) = max((2h(h+1))^(5c+1), 2^(2*3^(3c+1)+1) * c).
BigInt bound_K(int c, int h);

/// 2^(2*3^t).
BigInt f_envelope(int t);

/// (2h(h+1))^(2c+t).
BigInt phi_envelope(int c, int h, int t);

// All functions throw RangeError for nonpositive arguments and ResourceError
// when a value would exceed Limits::bound_bits bits.

}  // namespace dhero
