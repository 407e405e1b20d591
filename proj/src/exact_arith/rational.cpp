#include "umbral/rational.hpp"

#include "umbral/errors.hpp"

#include <ostream>

namespace umbral {

Rational::Rational(Int num, Int den) {
  if (den.is_zero()) {
    throw DomainError("rational with zero denominator");
  }
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  if (!g.is_one()) {
    num = divexact(num, g);
    den = divexact(den, g);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational& Rational::operator+=(const Rational& o) {
  if (is_integer() && o.is_integer()) {
    num_ += o.num_;
    return *this;
  }
  // a/b + c/d with g = gcd(b, d): only gcd(t, g) can cancel.
  Int g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    return *this;
  }
  Int b_g = divexact(den_, g);
  Int t = num_ * divexact(o.den_, g) + o.num_ * b_g;
  Int g2 = gcd(t, g);
  if (g2.is_one()) {
    num_ = std::move(t);
    den_ = b_g * o.den_;
  } else {
    num_ = divexact(t, g2);
    den_ = b_g * divexact(o.den_, g2);
  }
  if (num_.is_zero()) den_ = Int(1);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (is_zero() || o.is_zero()) {
    *this = Rational();
    return *this;
  }
  Int g1 = gcd(num_, o.den_);
  Int g2 = gcd(o.num_, den_);
  num_ = divexact(num_, g1) * divexact(o.num_, g2);
  den_ = divexact(den_, g2) * divexact(o.den_, g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  Int n = o.den_;
  Int d = o.num_;
  if (d.sign() < 0) {
    n = -n;
    d = -d;
  }
  return *this *= Rational(std::move(n), std::move(d), Reduced{});
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace umbral
