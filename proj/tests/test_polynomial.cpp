#include <doctest.h>

#include <stdexcept>

#include <vector>

#include "foil/polynomial.hpp"

using namespace foil;

namespace {

Polynomial poly(std::vector<long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(big));
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(12, 8) == 495);
  // Exceeds 64 bits; exercises the big-integer path.
  CHECK(binomial(70, 35) == BigInt("112186277816662845432"));
}

TEST_CASE("polynomial addition") {
  CHECK(poly({0, 1}) + poly({0, 1}) == poly({0, 2}));
  CHECK(Polynomial() + poly({0, 0, 1}) == poly({0, 0, 1}));
  CHECK(poly({0, 1, 1}) + poly({0, 2, 2}) == poly({0, 3, 3}));
}

TEST_CASE("polynomial multiplication") {
  CHECK(poly({0, 1}) * poly({1, 1}) == poly({0, 1, 1}));
  CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
  CHECK(poly({0, 1}) * (poly({1, 1}) * poly({1, 1})) == poly({0, 1, 2, 1}));
}

TEST_CASE("polynomial normalization and guards") {
  CHECK(poly({0, 1, 0, 0}) == poly({0, 1}));
  CHECK(poly({0, 0}).is_zero());
  CHECK(Polynomial().degree() == 0);
  CHECK(poly({0, 1, 3}).coefficient(7) == 0);
  CHECK_THROWS_AS(Polynomial({BigInt(-1)}), std::invalid_argument);
}

TEST_CASE("polynomial evaluation") {
  CHECK(poly({0, 3, 4, 1}).evaluate(1) == 8);
  CHECK(poly({0, 3, 4, 1}).evaluate(2) == 30);
  CHECK(Polynomial().evaluate(5) == 0);
}

TEST_CASE("twist loop polynomial closed form") {
  CHECK(twist_loop_polynomial(0) == poly({0, 1}));
  CHECK(twist_loop_polynomial(2) == poly({0, 1, 2, 1}));
  CHECK(twist_loop_polynomial(6) == poly({0, 1, 6, 15, 20, 15, 6, 1}));
}

TEST_CASE("foil polynomial closed form") {
  CHECK(foil_polynomial(0) == poly({0, 0, 1}));
  CHECK(foil_polynomial(1) == poly({0, 1, 1}));
  CHECK(foil_polynomial(3) == poly({0, 3, 4, 1}));
  CHECK(foil_polynomial(12).coefficient(2) == 67);
}

TEST_CASE("foil polynomial recurrence") {
  CHECK(foil_polynomial_by_recurrence(1) == poly({0, 1, 1}));
  CHECK(foil_polynomial_by_recurrence(2) == poly({0, 2, 2}));
  CHECK(foil_polynomial_by_recurrence(5) == poly({0, 5, 11, 10, 5, 1}));
}

TEST_CASE("recurrences agree with closed forms") {
  for (unsigned n = 0; n <= 64; ++n) {
    CHECK(foil_polynomial_by_recurrence(n) == foil_polynomial(n));
    CHECK(twist_loop_polynomial_by_recurrence(n) == twist_loop_polynomial(n));
  }
}

TEST_CASE("coefficient structure of both families") {
  for (unsigned n = 1; n <= 40; ++n) {
    const Polynomial t = twist_loop_polynomial(n);
    const Polynomial f = foil_polynomial(n);
    CHECK(t.coefficient(0) == 0);
    CHECK(f.coefficient(0) == 0);
    CHECK(f.coefficient(1) == n);
    CHECK(f.coefficient(2) == binomial(n, 2) + 1);
    for (unsigned k = 0; k <= n + 1; ++k) {
      CHECK(t.coefficient(k) == (k >= 1 ? binomial(n, k - 1) : BigInt(0)));
      if (k >= 3) CHECK(f.coefficient(k) == binomial(n, k));
    }
  }
}

TEST_CASE("coefficient sums count all split words") {
  CHECK(foil_polynomial(0).evaluate(1) == 1);
  CHECK(twist_loop_polynomial(0).evaluate(1) == 1);
  BigInt power = 2;
  for (unsigned n = 1; n <= 70; ++n) {
    CHECK(twist_loop_polynomial(n).evaluate(1) == power);
    CHECK(foil_polynomial(n).evaluate(1) == power);
    power *= 2;
  }
}

TEST_CASE("two-component counts follow the lazy caterer sequence") {
  const std::vector<long> expected = {1, 2, 4, 7, 11, 16, 22, 29, 37, 46, 56, 67, 79, 92, 106};
  for (unsigned n = 1; n <= expected.size(); ++n) {
    CHECK(foil_polynomial(n).coefficient(2) == expected[n - 1]);
  }
}

TEST_CASE("foil diagonal coefficients") {
  // f_{n,n} runs 0, 1, 2, 1, 1, 1, ...
  CHECK(foil_polynomial(0).coefficient(0) == 0);
  CHECK(foil_polynomial(1).coefficient(1) == 1);
  CHECK(foil_polynomial(2).coefficient(2) == 2);
  for (unsigned n = 3; n <= 20; ++n) {
    CHECK(foil_polynomial(n).coefficient(n) == 1);
  }
}

TEST_CASE("coefficient tables") {
  const auto twist = coefficient_table(KnotFamily::twist_loop, 4);
  REQUIRE(twist.size() == 5);
  CHECK(twist[4] == std::vector<BigInt>{0, 1, 4, 6, 4, 1});
  CHECK(twist[0] == std::vector<BigInt>{0, 1, 0, 0, 0, 0});  // padded with zeros

  const auto foil_rows = coefficient_table(KnotFamily::foil, 7);
  REQUIRE(foil_rows.size() == 8);
  CHECK(foil_rows[7] == std::vector<BigInt>{0, 7, 22, 35, 35, 21, 7, 1});

  const auto foil_zero = coefficient_table(KnotFamily::foil, 0);
  REQUIRE(foil_zero.size() == 1);
  CHECK(foil_zero[0] == std::vector<BigInt>{0, 0, 1});
}
