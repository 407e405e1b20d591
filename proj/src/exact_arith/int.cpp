#include "umbral/int.hpp"

#include "umbral/errors.hpp"

#include <limits>
#include <ostream>
#include <string>

namespace umbral {

Int Int::from_string(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw DomainError("not an integer: '" + std::string(text) + "'");
    }
  }
  // mpz rejects a leading '+'
  std::string buf(text.front() == '+' ? text.substr(1) : text);
  return Int(mpz_class(buf, 10));
}

Int Int::pow2(unsigned long k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, k);
  return Int(std::move(v));
}

unsigned long Int::mod(unsigned long m) const {
  return mpz_fdiv_ui(value_.get_mpz_t(), m);
}

bool Int::divisible_by(unsigned long m) const {
  return mpz_divisible_ui_p(value_.get_mpz_t(), m) != 0;
}

bool Int::divisible_by(const Int& m) const {
  return mpz_divisible_p(value_.get_mpz_t(), m.value_.get_mpz_t()) != 0;
}

bool Int::fits_int64() const {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value_ >= lo && value_ <= hi;
}

std::int64_t Int::to_int64() const {
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return static_cast<std::int64_t>(value_.get_si());
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.to_string(); }

Int gcd(const Int& a, const Int& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(std::move(g));
}

Int divexact(const Int& a, const Int& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return Int(std::move(q));
}

}  // namespace umbral
