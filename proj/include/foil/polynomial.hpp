#pragma once

#include <vector>

#include "foil/bigint.hpp"

namespace foil {

/// Dense univariate polynomial with nonnegative big-integer coefficients,
/// stored ascending by exponent. Coefficients here are always state counts,
/// so negative values are rejected outright.
class Polynomial {
 public:
  Polynomial() = default;  // the zero polynomial

  /// coefficients[k] is the coefficient of x^k. Trailing zeros are stripped;
  /// any negative coefficient throws std::invalid_argument.
  explicit Polynomial(std::vector<BigInt> coefficients);

  static Polynomial constant(BigInt value);
  static Polynomial monomial(unsigned exponent, BigInt coefficient = 1);

  bool is_zero() const { return coeffs_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& coefficient(unsigned exponent) const;

  BigInt evaluate(const BigInt& point) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  bool operator==(const Polynomial&) const = default;

 private:
  void strip_trailing_zeros();

  std::vector<BigInt> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

/// x(x+1)^n: counts the split states of the n-twist loop by component number.
Polynomial twist_loop_polynomial(unsigned n);

/// Same polynomial computed by iterating T_n = x T_{n-1} + T_{n-1} from T_0 = x.
Polynomial twist_loop_polynomial_by_recurrence(unsigned n);

/// (x+1)^n + x^2 - 1: counts the split states of the n-foil.
Polynomial foil_polynomial(unsigned n);

/// Same polynomial computed by iterating F_n = T_{n-1} + F_{n-1} from F_0 = x^2.
Polynomial foil_polynomial_by_recurrence(unsigned n);

enum class KnotFamily { twist_loop, foil };

Polynomial family_polynomial(KnotFamily family, unsigned n);

/// Row n, column k = coefficient of x^k in the family polynomial for n.
/// Rows are zero-padded to a common width (cells past the degree are zero).
std::vector<std::vector<BigInt>> coefficient_table(KnotFamily family, unsigned max_n);

}  // namespace foil
