#ifndef IE_FACTOR_HPP
#define IE_FACTOR_HPP

#include <map>
#include <vector>

#include "ie/bigint.hpp"

namespace ie {

bool is_probable_prime(const BigInt& n);

/// Prime factorization of n >= 1 (empty map for 1). Trial division for the
/// small part, Pollard-Brent rho for the rest.
std::map<BigInt, int> factorize(BigInt n);

/// All positive divisors of n >= 1, sorted ascending.
std::vector<BigInt> divisors(const BigInt& n);

}  // namespace ie

#endif
