#include "ie/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace ie {

std::int64_t to_int64(const BigInt& v) {
  if (v < std::numeric_limits<std::int64_t>::min() ||
      v > std::numeric_limits<std::int64_t>::max()) {
    throw std::overflow_error("value does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace ie
