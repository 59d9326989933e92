#include "foil/polynomial.hpp"

#include <stdexcept>
#include <utility>

namespace foil {

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  for (const BigInt& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("polynomial coefficients must be nonnegative");
  }
  strip_trailing_zeros();
}

Polynomial Polynomial::constant(BigInt value) {
  return Polynomial({std::move(value)});
}

Polynomial Polynomial::monomial(unsigned exponent, BigInt coefficient) {
  std::vector<BigInt> coeffs(exponent + 1);
  coeffs[exponent] = std::move(coefficient);
  return Polynomial(std::move(coeffs));
}

unsigned Polynomial::degree() const {
  return coeffs_.empty() ? 0 : static_cast<unsigned>(coeffs_.size() - 1);
}

const BigInt& Polynomial::coefficient(unsigned exponent) const {
  static const BigInt zero = 0;
  if (exponent >= coeffs_.size()) return zero;
  return coeffs_[exponent];
}

BigInt Polynomial::evaluate(const BigInt& point) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * point + *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  strip_trailing_zeros();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<BigInt> product(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      product[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(product));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

void Polynomial::strip_trailing_zeros() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

namespace {

Polynomial x_plus_one() {
  return Polynomial({1, 1});
}

}  // namespace

Polynomial twist_loop_polynomial(unsigned n) {
  return Polynomial::monomial(1) * pow(x_plus_one(), n);
}

Polynomial twist_loop_polynomial_by_recurrence(unsigned n) {
  Polynomial t = Polynomial::monomial(1);
  const Polynomial x = Polynomial::monomial(1);
  for (unsigned i = 1; i <= n; ++i) t = x * t + t;
  return t;
}

Polynomial foil_polynomial(unsigned n) {
  std::vector<BigInt> coeffs = pow(x_plus_one(), n).coefficients();
  coeffs[0] -= 1;  // constant term of (x+1)^n is 1, so this stays at 0
  if (coeffs.size() < 3) coeffs.resize(3);
  coeffs[2] += 1;
  return Polynomial(std::move(coeffs));
}

Polynomial foil_polynomial_by_recurrence(unsigned n) {
  Polynomial f = Polynomial::monomial(2);
  for (unsigned i = 1; i <= n; ++i) f += twist_loop_polynomial(i - 1);
  return f;
}

Polynomial family_polynomial(KnotFamily family, unsigned n) {
  return family == KnotFamily::twist_loop ? twist_loop_polynomial(n) : foil_polynomial(n);
}

std::vector<std::vector<BigInt>> coefficient_table(KnotFamily family, unsigned max_n) {
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(max_n + 1);
  std::size_t width = 0;
  for (unsigned n = 0; n <= max_n; ++n) {
    rows.push_back(family_polynomial(family, n).coefficients());
    width = std::max(width, rows.back().size());
  }
  for (auto& row : rows) row.resize(width);
  return rows;
}

}  // namespace foil
