#pragma once

#include "umbral/int.hpp"

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>

namespace umbral {

/**
 * Exact rational number kept in lowest terms.
 *
 *  - gcd(|num|, den) = 1
 *  - den >= 1, the sign lives on the numerator
 *  - zero is 0/1
 *
 * Because the representation is canonical, equality is member-wise and
 * den() is the denominator in the number-theoretic sense: the least positive
 * d with d * q integral.
 */
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  template <std::integral T>
  Rational(T v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)

  Rational(Int v) : num_(std::move(v)), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Throws DomainError when den is zero.
  Rational(Int num, Int den);

  [[nodiscard]] const Int& num() const { return num_; }
  [[nodiscard]] const Int& den() const { return den_; }

  [[nodiscard]] int sign() const { return num_.sign(); }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_integer() const { return den_.is_one(); }

  /// "num/den", or just "num" when den = 1.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DomainError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    a.num_ = -a.num_;
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q);

 private:
  struct Reduced {};
  Rational(Int num, Int den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Int num_;
  Int den_;
};

/// Smallest positive d with d * q integral; denominator(0) = 1.
inline const Int& denominator(const Rational& q) { return q.den(); }

/// (-1)^n as a Rational factor.
inline int parity_sign(unsigned long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace umbral
