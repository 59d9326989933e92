#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "foil/bigint.hpp"
#include "foil/words.hpp"

namespace foil {

struct RationalPoint {
  Rational x;
  Rational y;

  bool operator==(const RationalPoint&) const = default;
};

/// Line a*x + b*y + c = 0 with exact integer coefficients; the sign of the
/// left-hand side classifies points into the two half-planes.
struct Line {
  BigInt a;
  BigInt b;
  BigInt c;

  /// Throws std::invalid_argument when a = b = 0.
  Line(BigInt a, BigInt b, BigInt c);

  /// y = slope * x + intercept.
  static Line from_slope_intercept(const BigInt& slope, const BigInt& intercept);

  Rational evaluate(const RationalPoint& p) const;

  bool operator==(const Line&) const = default;
};

/// Member n of the line family y = n*x - n^2, oriented so that evaluate
/// computes y - n*x + n^2 (positive on the upper half-plane).
Line family_line(unsigned n);

int sign_of(const Rational& value);  // -1, 0, +1

/// Sign of y - n*x + n^2 at p: +1 above family line n, -1 below, 0 on it.
int halfplane_sign(unsigned n, const RationalPoint& p);

/// Exact intersection point, or nothing when the lines are parallel.
std::optional<RationalPoint> intersect(const Line& lhs, const Line& rhs);

/// Intersection of family lines p and q; equals (p+q, p*q).
/// Throws std::invalid_argument when p = q.
RationalPoint family_intersection(unsigned p, unsigned q);

struct ArrangementReport {
  enum class Status { ok, parallel_pair, triple_point };

  Status status = Status::ok;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;  // third line of a triple point

  bool ok() const { return status == Status::ok; }
};

/// ok iff no two lines are parallel and no three are concurrent;
/// otherwise identifies the first offending pair or triple.
ArrangementReport check_general_arrangement(const std::vector<Line>& lines);

/// Strict half-plane signs of one region, entry i for family line i.
struct SignVector {
  std::vector<int> signs;  // each +1 or -1

  bool operator==(const SignVector&) const = default;
};

/// +1 -> digit 1, -1 -> digit 0, positionally.
BinaryWord signvector_to_code(const SignVector& v);

/// One open region of the arrangement together with an interior point.
struct Region {
  SignVector signs;
  RationalPoint witness;
};

struct RegionEnumerationOptions {
  unsigned max_lines = 64;
};

/// Every open region of the arrangement of family lines 0..n-1, found purely
/// geometrically: sample vertical lines between consecutive intersection
/// abscissas, take witness points between consecutive line heights, and
/// deduplicate the resulting sign vectors. Result is sorted by code.
/// Throws std::length_error above the cap; requires n >= 1.
std::vector<Region> enumerate_regions(unsigned n, const RegionEnumerationOptions& options = {});

std::vector<SignVector> enumerate_region_signvectors(
    unsigned n, const RegionEnumerationOptions& options = {});

}  // namespace foil
