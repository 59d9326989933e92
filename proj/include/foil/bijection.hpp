#pragma once

#include <cstddef>
#include <vector>

#include "foil/words.hpp"

namespace foil {

/// Decomposition of a region code: either all ones, or
/// 1^leading_ones 0^zero_run 1^trailing_ones with zero_run >= 1.
struct RegionParse {
  bool all_ones = false;
  std::size_t length = 0;
  std::size_t leading_ones = 0;   // k
  std::size_t zero_run = 0;       // n - p - k
  std::size_t trailing_ones = 0;  // p

  BinaryWord word() const;
};

/// Throws std::invalid_argument when the word is not of region-code shape.
RegionParse parse_region_code(const BinaryWord& w);

/// Decomposition of a foil 2-state word: either all ones, or
/// 1^prefix_ones 0 1^middle_ones 0 1^suffix_ones (exactly two 0-digits).
struct StateParse {
  bool all_ones = false;
  std::size_t length = 0;
  std::size_t prefix_ones = 0;  // p
  std::size_t middle_ones = 0;  // k
  std::size_t suffix_ones = 0;  // m

  BinaryWord word() const;
};

/// Throws std::invalid_argument unless the word has zero or exactly two 0-digits.
StateParse parse_state_word(const BinaryWord& w);

/// The bijection from region codes of n lines to foil 2-state words of n+1
/// crossings: 1^n -> 1^(n+1) and 1^k 0^(n-p-k) 1^p -> 1^p 0 1^k 0 1^(n-p-k-1).
BinaryWord region_code_to_state_word(const BinaryWord& region_code);

/// Inverse map: 1^(n+1) -> 1^n and 1^p 0 1^k 0 1^m -> 1^k 0^(m+1) 1^p.
BinaryWord state_word_to_region_code(const BinaryWord& state_word);

/// Building block of the bijection: maps a new-region code 1^k 0^(l-k) to
/// the twist 2-state word 1^k 0 1^(l-k-1). Throws on any other shape.
BinaryWord new_region_to_twist_word(const BinaryWord& new_region_code);

/// One row of the pairing between region codes and state words. Grid entries
/// carry their (k, p) position; the all-ones pair has all_ones set instead.
struct PairingEntry {
  bool all_ones = false;
  std::size_t k = 0;
  std::size_t p = 0;
  BinaryWord region;
  BinaryWord state;
};

/// All pairs (region code, its state word) in grid order: k = 0..n-1 outer,
/// p = 0..n-1-k inner, with the all-ones pair appended last.
std::vector<PairingEntry> pairing_table(unsigned n);

}  // namespace foil
