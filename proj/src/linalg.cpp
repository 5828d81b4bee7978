#include "ie/linalg.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "ie/errors.hpp"
#include "ie/factor.hpp"

namespace ie {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols != b.rows) throw DomainError("matmul shape mismatch");
  RationalMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) out.at(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
  std::vector<std::size_t> pivot_cols;
  if (m.empty()) return pivot_cols;
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m[i][j].is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rational inv = Rational(1) / m[r][j];
    for (std::size_t k = j; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][j].is_zero()) continue;
      Rational f = m[i][j];
      for (std::size_t k = j; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    pivot_cols.push_back(j);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

RankKernel rank_kernel(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> work(m.rows, std::vector<Rational>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) work[i][j] = m.at(i, j);

  std::vector<std::size_t> pivot_cols = rref(work);
  RankKernel out;
  out.rank = pivot_cols.size();

  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t j : pivot_cols) is_pivot[j] = true;

  std::vector<std::vector<Rational>> kernel;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      v[pivot_cols[i]] = -work[i][f];
    }
    kernel.push_back(std::move(v));
  }
  rref(kernel);  // canonical form of the kernel basis
  out.kernel = std::move(kernel);
  return out;
}

LambdaPoly bareiss_det(const PolyMatrix& m) {
  if (m.rows != m.cols) throw DomainError("determinant of a non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return LambdaPoly(1);
  PolyMatrix w = m;
  int sign = 1;
  LambdaPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k).is_zero()) {
      std::size_t sel = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (!w.at(i, k).is_zero()) {
          sel = i;
          break;
        }
      }
      if (sel == n) return LambdaPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(sel, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        w.at(i, j) = exact_div(w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j), prev);
      }
      w.at(i, k) = LambdaPoly();
    }
    prev = w.at(k, k);
  }
  LambdaPoly det = w.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

PolyPivots poly_row_pivots(const PolyMatrix& m) {
  PolyMatrix w = m;
  std::vector<std::size_t> origin(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) origin[i] = i;

  PolyPivots out;
  LambdaPoly prev(1);
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols && r < m.rows; ++j) {
    std::size_t sel = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (!w.at(i, j).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel == m.rows) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(w.at(r, k), w.at(sel, k));
      std::swap(origin[r], origin[sel]);
    }
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t k = j + 1; k < m.cols; ++k) {
        w.at(i, k) = exact_div(w.at(i, k) * w.at(r, j) - w.at(i, j) * w.at(r, k), prev);
      }
      w.at(i, j) = LambdaPoly();
    }
    prev = w.at(r, j);
    out.pivot_rows.push_back(origin[r]);
    ++r;
  }
  out.rank = out.pivot_rows.size();
  std::sort(out.pivot_rows.begin(), out.pivot_rows.end());
  return out;
}

RationalMatrix eval_matrix(const PolyMatrix& m, const Rational& x) {
  RationalMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out.at(i, j) = m.at(i, j).eval(x);
  return out;
}

namespace {

std::optional<LambdaPoly> try_deflate(const LambdaPoly& p, const BigInt& a, const BigInt& b) {
  // attempts exact division by (b*lam - a)
  int d = p.degree();
  if (d < 1) return std::nullopt;
  std::vector<BigInt> h(static_cast<std::size_t>(d), BigInt(0));
  BigInt carry = 0;  // h[k]
  for (int k = d; k >= 1; --k) {
    BigInt top = p.coeff(k) + a * carry;
    if (top % b != 0) return std::nullopt;
    carry = top / b;
    h[static_cast<std::size_t>(k - 1)] = carry;
  }
  if (p.coeff(0) != -a * carry) return std::nullopt;
  return LambdaPoly::from_coeffs(std::move(h));
}

}  // namespace

RationalRootReport rational_roots(const LambdaPoly& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  RationalRootReport report;

  LambdaPoly q = p;
  int zero_mult = 0;
  while (!q.is_zero() && q.coeff(0) == 0) {
    q = exact_div(q, LambdaPoly::lam());
    ++zero_mult;
  }
  if (zero_mult > 0) report.roots.emplace_back(Rational(0), zero_mult);

  if (q.degree() >= 1) {
    std::vector<BigInt> nums = divisors(abs(q.coeff(0)));
    std::vector<BigInt> dens = divisors(abs(q.leading()));
    for (const BigInt& a : nums) {
      for (const BigInt& b : dens) {
        if (gcd(a, b) != 1) continue;
        for (int sign : {1, -1}) {
          BigInt pa = sign > 0 ? a : BigInt(-a);
          // cheap divisibility filters at lam = 1 and lam = -1
          BigInt q1 = q.eval(Rational(1)).num();
          BigInt qm1 = q.eval(Rational(-1)).num();
          if (q1 != 0 && b - pa != 0 && q1 % (b - pa) != 0) continue;
          if (qm1 != 0 && b + pa != 0 && qm1 % (b + pa) != 0) continue;
          int mult = 0;
          while (true) {
            auto h = try_deflate(q, pa, b);
            if (!h) break;
            q = std::move(*h);
            ++mult;
          }
          if (mult > 0) report.roots.emplace_back(Rational(pa, b), mult);
          if (q.degree() < 1) break;
        }
        if (q.degree() < 1) break;
      }
      if (q.degree() < 1) break;
    }
  }

  std::sort(report.roots.begin(), report.roots.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  report.residual = std::move(q);
  return report;
}

}  // namespace ie
