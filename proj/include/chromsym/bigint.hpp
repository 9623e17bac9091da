#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace chromsym {

/// Exact integer used for every count and coefficient.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

/// n (n-1) ... (n-k+1); zero when k > n.
BigInt falling_factorial(int n, int k);

inline std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt parse_decimal(const std::string& text);

}  // namespace chromsym
