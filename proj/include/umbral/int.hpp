#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace umbral {

// Arbitrary-precision signed integer. Thin value wrapper over GMP's mpz; the
// rest of the library only sees this interface.
class Int {
 public:
  Int() = default;

  template <std::signed_integral T>
  Int(T v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Int(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Int(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal string. Throws DomainError on
  /// anything else.
  static Int from_string(std::string_view text);

  /// 2^k.
  static Int pow2(unsigned long k);

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }

  [[nodiscard]] Int abs() const { return Int(mpz_class(::abs(value_))); }

  /// Non-negative residue modulo m (m > 0).
  [[nodiscard]] unsigned long mod(unsigned long m) const;
  [[nodiscard]] bool divisible_by(unsigned long m) const;
  [[nodiscard]] bool divisible_by(const Int& m) const;

  [[nodiscard]] bool fits_int64() const;
  /// Requires fits_int64().
  [[nodiscard]] std::int64_t to_int64() const;

  [[nodiscard]] std::string to_string() const { return value_.get_str(10); }

  [[nodiscard]] const mpz_class& raw() const { return value_; }

  Int& operator+=(const Int& o) { value_ += o.value_; return *this; }
  Int& operator-=(const Int& o) { value_ -= o.value_; return *this; }
  Int& operator*=(const Int& o) { value_ *= o.value_; return *this; }

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }
  friend Int operator-(const Int& a) { return Int(mpz_class(-a.value_)); }

  friend bool operator==(const Int& a, const Int& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Int& a, const Int& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Int& v);

 private:
  mpz_class value_;
};

/// Non-negative gcd; gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

/// a / b where b is known to divide a.
Int divexact(const Int& a, const Int& b);

}  // namespace umbral
