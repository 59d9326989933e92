#include <doctest.h>

#include <stdexcept>

#include <string>
#include <vector>

#include "foil/words.hpp"

using namespace foil;

namespace {

WordSet set_of(std::vector<std::string> words) {
  std::vector<BinaryWord> parsed;
  for (const std::string& w : words) parsed.push_back(BinaryWord::parse(w));
  return WordSet(std::move(parsed));
}

// All 2^n words of length n, for exhaustive membership checks.
std::vector<BinaryWord> all_words(unsigned n) {
  std::vector<BinaryWord> words;
  for (unsigned long m = 0; m < (1ul << n); ++m) {
    std::string digits(n, '0');
    for (unsigned i = 0; i < n; ++i) {
      if ((m >> i) & 1) digits[i] = '1';
    }
    words.push_back(BinaryWord::parse(digits));
  }
  return words;
}

bool is_region_shape(const BinaryWord& w) {
  // 1^a 0^b 1^c with b >= 1, or all ones.
  const std::string& d = w.digits();
  std::size_t i = 0;
  while (i < d.size() && d[i] == '1') ++i;
  std::size_t z = 0;
  while (i + z < d.size() && d[i + z] == '0') ++z;
  std::size_t j = i + z;
  while (j < d.size() && d[j] == '1') ++j;
  return j == d.size() && (z >= 1 || i == d.size());
}

}  // namespace

TEST_CASE("binary word basics") {
  CHECK(BinaryWord().length() == 0);
  CHECK(BinaryWord::ones(3).digits() == "111");
  CHECK(BinaryWord::zeros(2).digits() == "00");
  CHECK((BinaryWord::ones(1) + BinaryWord::zeros(1)).digits() == "10");
  CHECK(BinaryWord::parse("0101").count('0') == 2);
  CHECK_THROWS_AS(BinaryWord::parse("012"), std::invalid_argument);

  // Concatenation with the empty word is the identity.
  const BinaryWord w = BinaryWord::parse("1101");
  CHECK(w + BinaryWord() == w);
  CHECK(BinaryWord() + w == w);

  // Canonical order is length first, then lexicographic.
  CHECK(BinaryWord::parse("1") < BinaryWord::parse("00"));
  CHECK(BinaryWord::parse("01") < BinaryWord::parse("10"));
}

TEST_CASE("word set canonicalization") {
  const WordSet s = set_of({"10", "01", "10"});
  CHECK(s.size() == 2);
  CHECK(s.words().front().digits() == "01");
  CHECK(s.contains(BinaryWord::parse("10")));
  CHECK(!s.contains(BinaryWord::parse("11")));
  CHECK_THROWS_AS(set_of({"1", "00"}), std::invalid_argument);
}

TEST_CASE("twist two-state words") {
  CHECK(twist_two_state_words(0).empty());
  CHECK(twist_two_state_words(1) == set_of({"0"}));
  CHECK(twist_two_state_words(3) == set_of({"011", "101", "110"}));
  for (unsigned n = 1; n <= 32; ++n) {
    CHECK(twist_two_state_words(n).size() == n);
  }
}

TEST_CASE("foil two-state words") {
  CHECK(foil_two_state_words(0) == set_of({""}));
  CHECK(foil_two_state_words(1) == set_of({"1"}));
  CHECK(foil_two_state_words(2) == set_of({"00", "11"}));
  CHECK(foil_two_state_words(4) ==
        set_of({"0011", "0101", "0110", "1001", "1010", "1100", "1111"}));
}

TEST_CASE("foil two-state words by recurrence") {
  CHECK(foil_two_state_words_by_recurrence(1) == set_of({"1"}));
  CHECK(foil_two_state_words_by_recurrence(3) == set_of({"001", "010", "100", "111"}));
  CHECK(foil_two_state_words_by_recurrence(5).size() == 11);
}

TEST_CASE("region codes") {
  CHECK(region_codes(0) == set_of({""}));
  CHECK(region_codes(1) == set_of({"0", "1"}));
  CHECK(region_codes(4) == set_of({"0000", "1000", "1100", "1110", "0001", "1001", "1101",
                                   "0011", "1011", "0111", "1111"}));
}

TEST_CASE("region codes by recurrence") {
  CHECK(region_codes_by_recurrence(2) == set_of({"00", "10", "01", "11"}));
  CHECK(region_codes_by_recurrence(3) == set_of({"000", "100", "110", "001", "101", "011", "111"}));
  CHECK(region_codes_by_recurrence(8).size() == 37);
}

TEST_CASE("new region codes") {
  CHECK(new_region_codes(1) == set_of({"0"}));
  CHECK(new_region_codes(3) == set_of({"000", "100", "110"}));
  CHECK_THROWS_AS(new_region_codes(0), std::invalid_argument);
}

TEST_CASE("closed forms equal recurrences") {
  for (unsigned n = 0; n <= 64; ++n) {
    CHECK(region_codes(n) == region_codes_by_recurrence(n));
    CHECK(foil_two_state_words(n) == foil_two_state_words_by_recurrence(n));
    CHECK(region_codes(n).size() == (std::size_t{n} * n + n + 2) / 2);
    if (n >= 1) {
      CHECK(foil_two_state_words(n).size() == (std::size_t{n} * n - n + 2) / 2);
    }
  }
}

TEST_CASE("membership characterizations, exhaustively") {
  for (unsigned n = 2; n <= 12; ++n) {
    const WordSet regions = region_codes(n);
    const WordSet foilwords = foil_two_state_words(n);
    for (const BinaryWord& w : all_words(n)) {
      CHECK(regions.contains(w) == is_region_shape(w));
      const bool foil_member = w.count('0') == 0 || w.count('0') == 2;
      CHECK(foilwords.contains(w) == foil_member);
    }
  }
}

TEST_CASE("peeling recovers the previous sets") {
  CHECK(peel_last(set_of({"11"})) == set_of({"1"}));
  for (unsigned n = 1; n <= 16; ++n) {
    CHECK(peel_last(region_codes(n)) == region_codes(n - 1));
    CHECK(peel_first(foil_two_state_words(n)) == foil_two_state_words(n - 1));
  }
  CHECK(peel_last(WordSet()).empty());
  CHECK_THROWS_AS(peel_last(set_of({""})), std::invalid_argument);
}
