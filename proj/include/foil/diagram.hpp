#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "foil/polynomial.hpp"
#include "foil/words.hpp"

namespace foil {

enum class ArcSide : std::uint8_t { tail = 0, head = 1 };

/// One endpoint of an arc. Every end of every arc sits in exactly one
/// crossing slot of the diagram.
struct ArcEnd {
  std::uint32_t arc;
  ArcSide side;

  std::uint32_t encode() const { return 2 * arc + static_cast<std::uint32_t>(side); }
  bool operator==(const ArcEnd&) const = default;
};

inline ArcEnd tail_of(std::uint32_t arc) {
  return {arc, ArcSide::tail};
}
inline ArcEnd head_of(std::uint32_t arc) {
  return {arc, ArcSide::head};
}

using EndPair = std::pair<ArcEnd, ArcEnd>;

/// A 4-valent crossing given by its two smoothings: each pairing splits the
/// same four arc ends into two joined pairs, and the two pairings differ.
struct Crossing {
  std::array<EndPair, 2> pairing_a;  // chosen by split digit 0
  std::array<EndPair, 2> pairing_b;  // chosen by split digit 1
};

/// Split word for a diagram; digit i selects the smoothing of crossing i
/// (0 = pairing_a, 1 = pairing_b).
using SplitWord = BinaryWord;

/// Shadow diagram of a knot projection: arcs joined at crossings, plus any
/// crossing-free closed curves counted in base_loops.
class PlanarDiagram {
 public:
  /// Validates that the two pairings of each crossing cover the same four
  /// ends, that they differ, and that every end of arcs 0..arc_count-1
  /// occupies exactly one slot overall. Throws std::invalid_argument.
  PlanarDiagram(std::uint32_t arc_count, std::vector<Crossing> crossings,
                std::uint32_t base_loops);

  std::uint32_t arc_count() const { return arc_count_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::uint32_t crossing_count() const { return static_cast<std::uint32_t>(crossings_.size()); }
  std::uint32_t base_loops() const { return base_loops_; }

 private:
  std::uint32_t arc_count_;
  std::vector<Crossing> crossings_;
  std::uint32_t base_loops_;
};

/// The n-foil shadow: closure of the two-strand braid with n crossings.
/// n = 0 is two disjoint circles.
PlanarDiagram build_foil(unsigned n);

/// The n-twist loop shadow: one closed strand with n kinks in series.
/// n = 0 is a single circle.
PlanarDiagram build_twist_loop(unsigned n);

struct EnumerationOptions {
  std::uint32_t max_crossings = 30;  // 2^n states; guards the full enumeration
  unsigned threads = 0;              // 0 = pick from hardware_concurrency
};

/// Number of disjoint closed curves after applying the chosen smoothing at
/// every crossing. Throws std::invalid_argument on word-length mismatch.
unsigned count_components(const PlanarDiagram& diagram, const SplitWord& split);

/// Sum of x^(component count) over all 2^n split words, exactly.
/// Throws std::length_error when the crossing count exceeds the cap.
Polynomial state_sum(const PlanarDiagram& diagram, const EnumerationOptions& options = {});

/// All split words whose state has exactly k components, canonically sorted.
WordSet states_by_components(const PlanarDiagram& diagram, unsigned k,
                             const EnumerationOptions& options = {});

}  // namespace foil
