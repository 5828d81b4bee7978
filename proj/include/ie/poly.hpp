#ifndef IE_POLY_HPP
#define IE_POLY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "ie/bigint.hpp"
#include "ie/rational.hpp"

namespace ie {

/// Univariate polynomial in the formal weight variable "lam" with
/// arbitrary-precision integer coefficients, constant term first.
/// The zero polynomial stores no coefficients; otherwise the leading
/// coefficient is nonzero.
class LambdaPoly {
public:
  LambdaPoly() = default;  // zero
  LambdaPoly(long long c);  // NOLINT: implicit constant
  LambdaPoly(BigInt c);     // NOLINT: implicit constant

  /// The variable itself.
  static LambdaPoly lam();
  /// Builds from a coefficient list (constant term first); trailing zeros
  /// are trimmed.
  static LambdaPoly from_coeffs(std::vector<BigInt> coeffs);
  /// c0 + c1*lam.
  static LambdaPoly linear(BigInt c0, BigInt c1);

  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of lam^k (zero beyond the stored range).
  const BigInt& coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const;

  Rational eval(const Rational& x) const;

  LambdaPoly operator-() const;
  LambdaPoly& operator+=(const LambdaPoly& o);
  LambdaPoly& operator-=(const LambdaPoly& o);
  LambdaPoly& operator*=(const LambdaPoly& o);

  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const LambdaPoly& a, const LambdaPoly& b) { return !(a == b); }

  /// Renders terms in decreasing degree, e.g. "2*lam^2", "3*lam + 1", "0".
  /// With spaced=false the joiners carry no blanks ("2*lam+1").
  std::string to_string(bool spaced = true) const;

private:
  std::vector<BigInt> coeffs_;

  void trim();
};

/// Exact quotient a / b in ZZ[lam]; throws DomainError when b is zero or
/// does not divide a.
LambdaPoly exact_div(const LambdaPoly& a, const LambdaPoly& b);

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p);

/// Dense matrix over ZZ[lam].
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<LambdaPoly> entries;

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  LambdaPoly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const LambdaPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  static PolyMatrix identity(std::size_t n);
};

}  // namespace ie

#endif
