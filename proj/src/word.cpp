#include "thurston/word.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace thurston {

std::vector<int> free_reduce(std::vector<int> letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw Error("letter 0 is not a generator index");
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word::Word(std::vector<int> letters) : letters_(free_reduce(std::move(letters))) {}

Word Word::inverse() const {
  std::vector<int> inv(letters_.rbegin(), letters_.rend());
  for (int& l : inv) l = -l;
  Word w;
  w.letters_ = std::move(inv);  // reversal of a reduced word is reduced
  return w;
}

Word Word::concat(const Word& other) const {
  std::vector<int> joined = letters_;
  joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(joined));
}

Word Word::cyclically_reduced() const {
  std::size_t lo = 0, hi = letters_.size();
  while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
    ++lo;
    --hi;
  }
  Word w;
  w.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
  return w;
}

int letter_key(int letter) {
  const int idx = letter > 0 ? letter : -letter;
  return 2 * (idx - 1) + (letter < 0 ? 1 : 0);
}

namespace {

bool letters_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int ka = letter_key(a[i]), kb = letter_key(b[i]);
    if (ka != kb) return ka < kb;
  }
  return false;
}

// Least rotation of `v` (assumed cyclically reduced) under letters_less.
std::vector<int> least_rotation(const std::vector<int>& v) {
  if (v.size() <= 1) return v;
  std::vector<int> best = v;
  std::vector<int> rot = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (letters_less(rot, best)) best = rot;
  }
  return best;
}

}  // namespace

bool word_less(const Word& a, const Word& b) { return letters_less(a.letters(), b.letters()); }

Word Word::canonical_class_rep() const {
  const Word cyc = cyclically_reduced();
  if (cyc.empty()) return cyc;
  const std::vector<int> fwd = least_rotation(cyc.letters());
  const std::vector<int> bwd = least_rotation(cyc.inverse().letters());
  Word w;
  w.letters_ = letters_less(fwd, bwd) ? fwd : bwd;
  return w;
}

bool is_canonical_class_rep(const std::vector<int>& letters) {
  Word w;
  {
    std::vector<int> copy = letters;
    w = Word(std::move(copy));
  }
  if (w.letters() != letters) return false;  // not reduced as given
  return w.canonical_class_rep() == w;
}

std::string Word::str() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i];
  }
  return os.str();
}

std::uint64_t reduced_word_count(int rank, int max_len) {
  const std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  std::uint64_t level = 2ull * rank;  // words of length 1
  for (int l = 1; l <= max_len; ++l) {
    if (total > cap - level) return cap;
    total += level;
    if (l < max_len) {
      if (level > cap / (2ull * rank - 1)) return cap;
      level *= 2ull * rank - 1;
    }
  }
  return total;
}

std::vector<Word> enumerate_words(int rank, int max_len, EnumMode mode, std::uint64_t budget) {
  if (rank < 1) throw InvalidGroup("rank must be at least 1");
  if (max_len < 1) throw Error("max_len must be at least 1");
  const std::uint64_t count = reduced_word_count(rank, max_len);
  if (count > budget) {
    throw BudgetExceeded("enumeration of " + std::to_string(count) + " words exceeds budget " +
                         std::to_string(budget) + "; lower max_len");
  }
  std::vector<Word> out;
  visit_reduced_words(rank, max_len, [&](const std::vector<int>& letters) {
    if (mode == EnumMode::CyclicReps && !is_canonical_class_rep(letters)) return;
    std::vector<int> copy = letters;
    out.push_back(Word(std::move(copy)));
  });
  return out;
}

}  // namespace thurston
