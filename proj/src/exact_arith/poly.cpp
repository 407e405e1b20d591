#include "umbral/poly.hpp"

#include <algorithm>

namespace umbral {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

std::optional<std::size_t> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

std::string Poly::to_string() const {
  std::string out = "[";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ", ";
    out += coeffs_[k].to_string();
  }
  return out + "]";
}

Poly poly_add(const Poly& a, const Poly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return Poly(std::move(c));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  return poly_add(a, poly_scale(b, Rational(-1)));
}

Poly poly_scale(const Poly& p, const Rational& c) {
  std::vector<Rational> out;
  out.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) out.push_back(a * c);
  return Poly(std::move(out));
}

Rational poly_eval(const Poly& p, const Rational& x) {
  Rational acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly poly_compose_neg(const Poly& p) {
  std::vector<Rational> out = p.coeffs();
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return Poly(std::move(out));
}

}  // namespace umbral
