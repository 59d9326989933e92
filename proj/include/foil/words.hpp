#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace foil {

/// Finite word over {0,1}. The empty word is allowed; digit 0 is leftmost.
class BinaryWord {
 public:
  BinaryWord() = default;  // the empty word

  /// Throws std::invalid_argument on characters outside {0,1}.
  static BinaryWord parse(std::string_view digits);
  static BinaryWord ones(std::size_t count);
  static BinaryWord zeros(std::size_t count);

  std::size_t length() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  char operator[](std::size_t i) const { return digits_[i]; }
  std::size_t count(char digit) const;
  const std::string& digits() const { return digits_; }

  BinaryWord operator+(const BinaryWord& rhs) const;

  bool operator==(const BinaryWord&) const = default;
  // Canonical order: length first, then lexicographic.
  std::strong_ordering operator<=>(const BinaryWord& rhs) const;

 private:
  explicit BinaryWord(std::string digits) : digits_(std::move(digits)) {}

  std::string digits_;
};

/// Sorted, duplicate-free collection of equal-length binary words.
class WordSet {
 public:
  WordSet() = default;

  /// Sorts and deduplicates; throws std::invalid_argument on mixed lengths.
  explicit WordSet(std::vector<BinaryWord> words);

  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool contains(const BinaryWord& word) const;
  const std::vector<BinaryWord>& words() const { return words_; }
  auto begin() const { return words_.begin(); }
  auto end() const { return words_.end(); }

  bool operator==(const WordSet&) const = default;

 private:
  std::vector<BinaryWord> words_;
};

/// Split words of the 2-states of the n-twist loop: 1^k 0 1^(n-k-1) for
/// k = 0..n-1 (exactly one 0-digit). Empty for n = 0.
WordSet twist_two_state_words(unsigned n);

/// Split words of the 2-states of the n-foil: for n >= 2 the all-ones word
/// plus every word with exactly two 0-digits; {empty word} for n = 0, {1} for n = 1.
WordSet foil_two_state_words(unsigned n);

/// Same set built by the recurrence F_n = 0 T_(n-1) u 1 F_(n-1).
WordSet foil_two_state_words_by_recurrence(unsigned n);

/// Region codes of the arrangement of the first n family lines:
/// 1^k 0^(n-p-k) 1^p plus the all-ones word; {empty word} for n = 0.
WordSet region_codes(unsigned n);

/// Same set built by the recurrence P_n = P_(n-1) 1 u R_n.
WordSet region_codes_by_recurrence(unsigned n);

/// The n regions created by adding the n-th line: 1^k 0^(n-k), k = 0..n-1.
/// Throws std::invalid_argument for n = 0.
WordSet new_region_codes(unsigned n);

/// Words of s ending in 1, with that final digit removed. Recovers the
/// region codes of one line fewer. Requires word length >= 1.
WordSet peel_last(const WordSet& s);

/// Words of s starting with 1, with that first digit removed. Recovers the
/// foil 2-state words of one crossing fewer. Requires word length >= 1.
WordSet peel_first(const WordSet& s);

}  // namespace foil
