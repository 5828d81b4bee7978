#ifndef IE_BIGINT_HPP
#define IE_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace ie {

/// Arbitrary-precision signed integer. Every coefficient in the library is
/// exact; fixed-width arithmetic is never used for mathematical values.
using BigInt = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

/// Checked narrowing for serialization. Throws std::overflow_error when the
/// value does not fit.
std::int64_t to_int64(const BigInt& v);

std::string to_string(const BigInt& v);

}  // namespace ie

#endif
