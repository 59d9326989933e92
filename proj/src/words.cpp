#include "foil/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace foil {

BinaryWord BinaryWord::parse(std::string_view digits) {
  for (char c : digits) {
    if (c != '0' && c != '1') throw std::invalid_argument("binary word digits must be 0 or 1");
  }
  return BinaryWord(std::string(digits));
}

BinaryWord BinaryWord::ones(std::size_t count) {
  return BinaryWord(std::string(count, '1'));
}

BinaryWord BinaryWord::zeros(std::size_t count) {
  return BinaryWord(std::string(count, '0'));
}

std::size_t BinaryWord::count(char digit) const {
  return static_cast<std::size_t>(std::count(digits_.begin(), digits_.end(), digit));
}

BinaryWord BinaryWord::operator+(const BinaryWord& rhs) const {
  return BinaryWord(digits_ + rhs.digits_);
}

std::strong_ordering BinaryWord::operator<=>(const BinaryWord& rhs) const {
  if (auto cmp = digits_.size() <=> rhs.digits_.size(); cmp != 0) return cmp;
  return digits_.compare(rhs.digits_) <=> 0;
}

WordSet::WordSet(std::vector<BinaryWord> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
  for (const BinaryWord& w : words_) {
    if (w.length() != words_.front().length()) {
      throw std::invalid_argument("word set requires uniform word length");
    }
  }
}

bool WordSet::contains(const BinaryWord& word) const {
  return std::binary_search(words_.begin(), words_.end(), word);
}

WordSet twist_two_state_words(unsigned n) {
  std::vector<BinaryWord> words;
  words.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    words.push_back(BinaryWord::ones(k) + BinaryWord::zeros(1) + BinaryWord::ones(n - k - 1));
  }
  return WordSet(std::move(words));
}

WordSet foil_two_state_words(unsigned n) {
  if (n == 0) return WordSet({BinaryWord()});
  if (n == 1) return WordSet({BinaryWord::ones(1)});
  std::vector<BinaryWord> words;
  words.reserve((n * n - n + 2) / 2);
  for (unsigned p = 0; p + 2 <= n; ++p) {
    for (unsigned k = 0; p + k + 2 <= n; ++k) {
      words.push_back(BinaryWord::ones(p) + BinaryWord::zeros(1) + BinaryWord::ones(k) +
                      BinaryWord::zeros(1) + BinaryWord::ones(n - p - k - 2));
    }
  }
  words.push_back(BinaryWord::ones(n));
  return WordSet(std::move(words));
}

namespace {

std::vector<BinaryWord> prepend(const BinaryWord& prefix, const WordSet& s) {
  std::vector<BinaryWord> out;
  out.reserve(s.size());
  for (const BinaryWord& w : s) out.push_back(prefix + w);
  return out;
}

}  // namespace

WordSet foil_two_state_words_by_recurrence(unsigned n) {
  if (n == 0) return WordSet({BinaryWord()});
  WordSet current({BinaryWord::ones(1)});
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<BinaryWord> words = prepend(BinaryWord::zeros(1), twist_two_state_words(m - 1));
    std::vector<BinaryWord> kept = prepend(BinaryWord::ones(1), current);
    words.insert(words.end(), kept.begin(), kept.end());
    current = WordSet(std::move(words));
  }
  return current;
}

WordSet region_codes(unsigned n) {
  if (n == 0) return WordSet({BinaryWord()});
  std::vector<BinaryWord> words;
  words.reserve((n * n + n + 2) / 2);
  for (unsigned p = 0; p + 1 <= n; ++p) {
    for (unsigned k = 0; p + k + 1 <= n; ++k) {
      words.push_back(BinaryWord::ones(k) + BinaryWord::zeros(n - p - k) + BinaryWord::ones(p));
    }
  }
  words.push_back(BinaryWord::ones(n));
  return WordSet(std::move(words));
}

WordSet region_codes_by_recurrence(unsigned n) {
  WordSet current({BinaryWord()});
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<BinaryWord> words;
    words.reserve(current.size() + m);
    for (const BinaryWord& w : current) words.push_back(w + BinaryWord::ones(1));
    for (const BinaryWord& w : new_region_codes(m)) words.push_back(w);
    current = WordSet(std::move(words));
  }
  return current;
}

WordSet new_region_codes(unsigned n) {
  if (n == 0) throw std::invalid_argument("no new regions without a line");
  std::vector<BinaryWord> words;
  words.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    words.push_back(BinaryWord::ones(k) + BinaryWord::zeros(n - k));
  }
  return WordSet(std::move(words));
}

namespace {

WordSet peel(const WordSet& s, bool last) {
  if (s.empty()) return WordSet();
  if (s.words().front().length() == 0) {
    throw std::invalid_argument("cannot peel words of length zero");
  }
  std::vector<BinaryWord> words;
  for (const BinaryWord& w : s) {
    const std::string& d = w.digits();
    if (last && d.back() == '1') {
      words.push_back(BinaryWord::parse(d.substr(0, d.size() - 1)));
    } else if (!last && d.front() == '1') {
      words.push_back(BinaryWord::parse(d.substr(1)));
    }
  }
  return WordSet(std::move(words));
}

}  // namespace

WordSet peel_last(const WordSet& s) {
  return peel(s, true);
}

WordSet peel_first(const WordSet& s) {
  return peel(s, false);
}

}  // namespace foil
