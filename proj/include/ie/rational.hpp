#ifndef IE_RATIONAL_HPP
#define IE_RATIONAL_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "ie/bigint.hpp"

namespace ie {

/// Exact rational number in lowest terms.
///
/// Invariants: denominator > 0 and gcd(|numerator|, denominator) = 1.
/// Text form is "p/q", with "/q" omitted when q = 1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}
  Rational(BigInt num, BigInt den);

  /// Parses "p" or "p/q" with an optional leading sign. Throws ParseError.
  static Rational from_string(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Division by zero throws DomainError.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const;

private:
  BigInt num_;
  BigInt den_;

  void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ie

#endif
