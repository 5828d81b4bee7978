#include "ie/factor.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>

#include "ie/errors.hpp"

namespace ie {

namespace {

BigInt pollard_rho(const BigInt& n, unsigned seed) {
  // Brent's cycle-finding variant; n must be odd composite.
  BigInt x = 2 + seed;
  BigInt y = x;
  BigInt c = 1 + seed;
  BigInt d = 1;
  auto step = [&](const BigInt& v) { return (v * v + c) % n; };
  while (d == 1) {
    x = step(x);
    y = step(step(y));
    BigInt diff = x > y ? x - y : y - x;
    if (diff == 0) return 0;  // cycle without factor, caller retries
    d = gcd(diff, n);
  }
  return d == n ? 0 : d;
}

void factor_into(BigInt n, std::map<BigInt, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return;
  }
  for (unsigned seed = 0;; ++seed) {
    if (seed > 64) throw DomainError("factorization failed for " + n.str());
    BigInt d = pollard_rho(n, seed);
    if (d != 0) {
      factor_into(d, out);
      factor_into(n / d, out);
      return;
    }
  }
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  return boost::multiprecision::miller_rabin_test(n, 32);
}

std::map<BigInt, int> factorize(BigInt n) {
  if (n < 1) throw DomainError("factorize expects n >= 1");
  std::map<BigInt, int> out;
  for (BigInt p : {BigInt(2), BigInt(3), BigInt(5)}) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
  }
  // wheel over 7, 11, 13, ... up to 2^20
  BigInt p = 7;
  const BigInt bound = 1 << 20;
  while (p <= bound && p * p <= n) {
    while (n % p == 0) {
      out[p] += 1;
      n /= p;
    }
    p += 2;
    if (p % 3 == 0 || p % 5 == 0) p += 2;
  }
  if (n > 1 && p * p > n) {
    out[n] += 1;
    return out;
  }
  factor_into(n, out);
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  auto factors = factorize(n);
  std::vector<BigInt> out = {BigInt(1)};
  for (const auto& [p, mult] : factors) {
    std::size_t base = out.size();
    BigInt q = 1;
    for (int e = 1; e <= mult; ++e) {
      q *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ie
