#include "ie/rational.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "ie/errors.hpp"

namespace ie {

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::from_string(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> BigInt {
    std::string digits;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) digits.push_back(text[i++]);
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      digits.push_back(text[i++]);
    if (i == start) throw ParseError("expected integer", i);
    return BigInt(digits);
  };
  skip_ws();
  BigInt num = read_int();
  BigInt den = 1;
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_int();
    skip_ws();
  }
  if (i != text.size()) throw ParseError("trailing characters after rational", i);
  return Rational(std::move(num), std::move(den));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw DomainError("rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::string Rational::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace ie
