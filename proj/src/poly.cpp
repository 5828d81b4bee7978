#include "ie/poly.hpp"

#include <ostream>
#include <utility>

#include "ie/errors.hpp"

namespace ie {

namespace {
const BigInt kZero = 0;
}

LambdaPoly::LambdaPoly(long long c) {
  if (c != 0) coeffs_.push_back(BigInt(c));
}

LambdaPoly::LambdaPoly(BigInt c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LambdaPoly LambdaPoly::lam() {
  LambdaPoly p;
  p.coeffs_ = {BigInt(0), BigInt(1)};
  return p;
}

LambdaPoly LambdaPoly::from_coeffs(std::vector<BigInt> coeffs) {
  LambdaPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

LambdaPoly LambdaPoly::linear(BigInt c0, BigInt c1) {
  return from_coeffs({std::move(c0), std::move(c1)});
}

void LambdaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& LambdaPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& LambdaPoly::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

Rational LambdaPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  return acc;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return LambdaPoly();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LambdaPoly::from_coeffs(std::move(out));
}

LambdaPoly& LambdaPoly::operator*=(const LambdaPoly& o) {
  *this = *this * o;
  return *this;
}

std::string LambdaPoly::to_string(bool spaced) const {
  if (coeffs_.empty()) return "0";
  const char* plus = spaced ? " + " : "+";
  const char* minus = spaced ? " - " : "-";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += (c < 0) ? minus : plus;
    }
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += "lam";
      if (k > 1) {
        out += '^';
        out += std::to_string(k);
      }
    }
  }
  return out;
}

LambdaPoly exact_div(const LambdaPoly& a, const LambdaPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return LambdaPoly();
  if (a.degree() < b.degree()) throw DomainError("inexact polynomial division");
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
  const auto& d = b.coeffs();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigInt top = rem[static_cast<std::size_t>(k + b.degree())];
    if (top == 0) continue;
    BigInt q = top / b.leading();
    if (q * b.leading() != top) throw DomainError("inexact polynomial division");
    quot[static_cast<std::size_t>(k)] = q;
    for (std::size_t i = 0; i < d.size(); ++i) {
      rem[static_cast<std::size_t>(k) + i] -= q * d[i];
    }
  }
  for (const auto& c : rem) {
    if (c != 0) throw DomainError("inexact polynomial division");
  }
  return LambdaPoly::from_coeffs(std::move(quot));
}

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) {
  return os << p.to_string();
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LambdaPoly(1);
  return m;
}

}  // namespace ie
