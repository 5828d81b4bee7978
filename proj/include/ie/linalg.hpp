#ifndef IE_LINALG_HPP
#define IE_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ie/poly.hpp"
#include "ie/rational.hpp"

namespace ie {

/// Dense matrix over the rationals.
struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;

  RationalMatrix() = default;
  RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  static RationalMatrix identity(std::size_t n);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b);

/// Dense matrix over the integers.
struct ZMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> entries;

  ZMatrix() = default;
  ZMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  BigInt& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

  friend bool operator==(const ZMatrix& a, const ZMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
  }
};

struct RankKernel {
  std::size_t rank = 0;
  /// Basis of the right kernel; as a row matrix it is in reduced echelon
  /// form, which makes the output deterministic.
  std::vector<std::vector<Rational>> kernel;
};

/// Exact rank and kernel basis via Gauss-Jordan elimination.
RankKernel rank_kernel(const RationalMatrix& m);

/// Exact determinant of a square matrix over ZZ[lam] by fraction-free
/// (Bareiss) elimination. Throws DomainError when not square.
LambdaPoly bareiss_det(const PolyMatrix& m);

struct PolyPivots {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // ascending original row indices
};

/// Rank of a matrix over the rational-function field QQ(lam), together with
/// the rows where pivots land. Deterministic: columns are processed left to
/// right and the first row with a nonzero entry is chosen.
PolyPivots poly_row_pivots(const PolyMatrix& m);

/// Entry-wise evaluation at a rational point.
RationalMatrix eval_matrix(const PolyMatrix& m, const Rational& x);

struct RationalRootReport {
  /// (root, multiplicity) pairs sorted by root value.
  std::vector<std::pair<Rational, int>> roots;
  /// Integer cofactor with no rational roots; p equals the product of the
  /// monic factors (lam - root)^mult, the residual, and a constant.
  LambdaPoly residual;
};

/// All rational roots of a nonzero integer polynomial, by the rational-root
/// bound plus exact deflation. Throws DomainError on the zero polynomial.
RationalRootReport rational_roots(const LambdaPoly& p);

}  // namespace ie

#endif
