#pragma once

#include "umbral/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace umbral {

// Dense polynomial over the rationals; coeffs()[k] is the coefficient of x^k.
// Trailing zeros are never stored, so the zero polynomial has no coefficients
// and no degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero past the degree.
  [[nodiscard]] Rational coeff(std::size_t k) const;

  /// nullopt stands for the degree of the zero polynomial (-infinity).
  [[nodiscard]] std::optional<std::size_t> degree() const;
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  /// Coefficients low-to-high, e.g. "[-1/2, 1]".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& p, const Rational& c);
/// Horner evaluation.
Rational poly_eval(const Poly& p, const Rational& x);
/// p(-x): odd-index coefficients change sign.
Poly poly_compose_neg(const Poly& p);

inline Poly operator+(const Poly& a, const Poly& b) { return poly_add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return poly_sub(a, b); }

}  // namespace umbral
