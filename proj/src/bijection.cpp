#include "foil/bijection.hpp"

#include <stdexcept>

namespace foil {

namespace {

std::size_t leading_run(const std::string& digits, char digit) {
  std::size_t i = 0;
  while (i < digits.size() && digits[i] == digit) ++i;
  return i;
}

std::size_t trailing_run(const std::string& digits, char digit) {
  std::size_t i = 0;
  while (i < digits.size() && digits[digits.size() - 1 - i] == digit) ++i;
  return i;
}

}  // namespace

BinaryWord RegionParse::word() const {
  if (all_ones) return BinaryWord::ones(length);
  return BinaryWord::ones(leading_ones) + BinaryWord::zeros(zero_run) +
         BinaryWord::ones(trailing_ones);
}

RegionParse parse_region_code(const BinaryWord& w) {
  const std::string& digits = w.digits();
  RegionParse parse;
  parse.length = digits.size();
  if (w.count('0') == 0) {
    parse.all_ones = true;
    return parse;
  }
  parse.leading_ones = leading_run(digits, '1');
  parse.trailing_ones = trailing_run(digits, '1');
  parse.zero_run = digits.size() - parse.leading_ones - parse.trailing_ones;
  for (std::size_t i = parse.leading_ones; i < digits.size() - parse.trailing_ones; ++i) {
    if (digits[i] != '0') {
      throw std::invalid_argument("not a region code: " + digits);
    }
  }
  return parse;
}

BinaryWord StateParse::word() const {
  if (all_ones) return BinaryWord::ones(length);
  return BinaryWord::ones(prefix_ones) + BinaryWord::zeros(1) + BinaryWord::ones(middle_ones) +
         BinaryWord::zeros(1) + BinaryWord::ones(suffix_ones);
}

StateParse parse_state_word(const BinaryWord& w) {
  const std::string& digits = w.digits();
  StateParse parse;
  parse.length = digits.size();
  const std::size_t zeros = w.count('0');
  if (zeros == 0) {
    parse.all_ones = true;
    return parse;
  }
  if (zeros != 2) {
    throw std::invalid_argument("not a 2-state word (needs zero or two 0-digits): " + digits);
  }
  const std::size_t first = digits.find('0');
  const std::size_t second = digits.find('0', first + 1);
  parse.prefix_ones = first;
  parse.middle_ones = second - first - 1;
  parse.suffix_ones = digits.size() - second - 1;
  return parse;
}

BinaryWord region_code_to_state_word(const BinaryWord& region_code) {
  const RegionParse parse = parse_region_code(region_code);
  if (parse.all_ones) return BinaryWord::ones(parse.length + 1);
  return BinaryWord::ones(parse.trailing_ones) + BinaryWord::zeros(1) +
         BinaryWord::ones(parse.leading_ones) + BinaryWord::zeros(1) +
         BinaryWord::ones(parse.zero_run - 1);
}

BinaryWord state_word_to_region_code(const BinaryWord& state_word) {
  const StateParse parse = parse_state_word(state_word);
  if (parse.all_ones) {
    if (parse.length == 0) {
      throw std::invalid_argument("empty word is not a 2-state word");
    }
    return BinaryWord::ones(parse.length - 1);
  }
  return BinaryWord::ones(parse.middle_ones) + BinaryWord::zeros(parse.suffix_ones + 1) +
         BinaryWord::ones(parse.prefix_ones);
}

BinaryWord new_region_to_twist_word(const BinaryWord& new_region_code) {
  const RegionParse parse = parse_region_code(new_region_code);
  if (parse.all_ones || parse.trailing_ones != 0) {
    throw std::invalid_argument("not a new-region code (expected 1^k 0^(l-k)): " +
                                new_region_code.digits());
  }
  return BinaryWord::ones(parse.leading_ones) + BinaryWord::zeros(1) +
         BinaryWord::ones(parse.zero_run - 1);
}

std::vector<PairingEntry> pairing_table(unsigned n) {
  std::vector<PairingEntry> entries;
  entries.reserve((n * n + n + 2) / 2);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p + k < n; ++p) {
      PairingEntry entry;
      entry.k = k;
      entry.p = p;
      entry.region = BinaryWord::ones(k) + BinaryWord::zeros(n - p - k) + BinaryWord::ones(p);
      entry.state = region_code_to_state_word(entry.region);
      entries.push_back(std::move(entry));
    }
  }
  PairingEntry all_ones;
  all_ones.all_ones = true;
  all_ones.region = BinaryWord::ones(n);
  all_ones.state = BinaryWord::ones(n + 1);
  entries.push_back(std::move(all_ones));
  return entries;
}

}  // namespace foil
