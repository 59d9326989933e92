#include "foil/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace foil {

Line::Line(BigInt a_in, BigInt b_in, BigInt c_in)
    : a(std::move(a_in)), b(std::move(b_in)), c(std::move(c_in)) {
  if (a == 0 && b == 0) throw std::invalid_argument("line requires (a, b) != (0, 0)");
}

Line Line::from_slope_intercept(const BigInt& slope, const BigInt& intercept) {
  return Line(-slope, 1, -intercept);
}

Rational Line::evaluate(const RationalPoint& p) const {
  return Rational(a) * p.x + Rational(b) * p.y + Rational(c);
}

Line family_line(unsigned n) {
  const BigInt slope = n;
  return Line(-slope, 1, slope * slope);
}

int sign_of(const Rational& value) {
  return value.sign();
}

int halfplane_sign(unsigned n, const RationalPoint& p) {
  return sign_of(family_line(n).evaluate(p));
}

namespace {

Rational ratio(BigInt num, BigInt den) {
  if (den < 0) {  // the two-argument constructor requires a positive denominator
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

}  // namespace

std::optional<RationalPoint> intersect(const Line& lhs, const Line& rhs) {
  const BigInt det = lhs.a * rhs.b - rhs.a * lhs.b;
  if (det == 0) return std::nullopt;
  const Rational x = ratio(lhs.b * rhs.c - rhs.b * lhs.c, det);
  const Rational y = ratio(rhs.a * lhs.c - lhs.a * rhs.c, det);
  return RationalPoint{x, y};
}

RationalPoint family_intersection(unsigned p, unsigned q) {
  if (p == q) throw std::invalid_argument("identical family line");
  return *intersect(family_line(p), family_line(q));
}

ArrangementReport check_general_arrangement(const std::vector<Line>& lines) {
  if (lines.empty()) throw std::invalid_argument("arrangement check requires at least one line");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto point = intersect(lines[i], lines[j]);
      if (!point) {
        return {ArrangementReport::Status::parallel_pair, i, j, 0};
      }
      for (std::size_t k = 0; k < lines.size(); ++k) {
        if (k == i || k == j) continue;
        if (lines[k].evaluate(*point) == 0) {
          return {ArrangementReport::Status::triple_point, i, j, k};
        }
      }
    }
  }
  return {};
}

BinaryWord signvector_to_code(const SignVector& v) {
  std::string digits;
  digits.reserve(v.signs.size());
  for (int s : v.signs) digits.push_back(s > 0 ? '1' : '0');
  return BinaryWord::parse(digits);
}

std::vector<Region> enumerate_regions(unsigned n, const RegionEnumerationOptions& options) {
  if (n == 0) throw std::invalid_argument("region enumeration requires at least one line");
  if (n > options.max_lines) {
    throw std::length_error("line count " + std::to_string(n) + " exceeds the enumeration cap of " +
                            std::to_string(options.max_lines));
  }

  // Family lines pairwise intersect at integer abscissas p+q <= 2n-3, so
  // half-integer samples inside [0, 2n-2] plus one sample beyond each side
  // meet every region's x-projection.
  std::vector<Rational> sample_xs;
  sample_xs.emplace_back(-1);
  for (int m = 0; m <= 2 * static_cast<int>(n) - 3; ++m) {
    sample_xs.push_back(Rational(2 * m + 1, 2));
  }
  sample_xs.emplace_back(2 * static_cast<int>(n) - 1);

  std::map<BinaryWord, Region> regions;
  std::vector<std::pair<Rational, unsigned>> heights(n);

  auto record = [&](const RationalPoint& point) {
    SignVector v;
    v.signs.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
      const int s = halfplane_sign(i, point);
      if (s == 0) throw std::logic_error("witness point fell on a boundary line");
      v.signs.push_back(s);
    }
    BinaryWord code = signvector_to_code(v);
    regions.try_emplace(std::move(code), Region{std::move(v), point});
  };

  for (const Rational& x : sample_xs) {
    for (unsigned i = 0; i < n; ++i) {
      const BigInt slope = i;
      heights[i] = {Rational(slope) * x - Rational(slope * slope), i};
    }
    std::sort(heights.begin(), heights.end());
    record({x, heights.front().first - 1});
    for (std::size_t i = 0; i + 1 < heights.size(); ++i) {
      record({x, (heights[i].first + heights[i + 1].first) / 2});
    }
    record({x, heights.back().first + 1});
  }

  std::vector<Region> result;
  result.reserve(regions.size());
  for (auto& [code, region] : regions) result.push_back(std::move(region));
  return result;
}

std::vector<SignVector> enumerate_region_signvectors(unsigned n,
                                                     const RegionEnumerationOptions& options) {
  std::vector<SignVector> vectors;
  for (Region& region : enumerate_regions(n, options)) {
    vectors.push_back(std::move(region.signs));
  }
  return vectors;
}

}  // namespace foil
