#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thurston/errors.hpp"

namespace thurston {

// A freely reduced word in a free group. Letters are signed 1-based
// generator indices: +i is the i-th generator, -i its inverse.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);  // freely reduces the input

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word concat(const Word& other) const;  // freely reduced product
  Word cyclically_reduced() const;
  // Least word (see word_less) among all rotations of the cyclic reduction
  // and of its inverse; the chosen representative of the conjugacy-and-
  // inversion class.
  Word canonical_class_rep() const;

  friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

  std::string str() const;  // letters separated by spaces; "e" when empty

 private:
  std::vector<int> letters_;
};

// Letter order 1 < -1 < 2 < -2 < ...; words compared by length, then
// letterwise. Used for deterministic witnesses and class representatives.
int letter_key(int letter);
bool word_less(const Word& a, const Word& b);

std::vector<int> free_reduce(std::vector<int> letters);

enum class EnumMode { All, CyclicReps };

// 1 + sum_{l=1..L} 2r (2r-1)^(l-1), saturating at uint64 max.
std::uint64_t reduced_word_count(int rank, int max_len);

// All freely reduced words of length <= max_len (including the empty word),
// or one representative per conjugacy-and-inversion class. Throws
// BudgetExceeded if the full count exceeds the budget.
std::vector<Word> enumerate_words(int rank, int max_len, EnumMode mode,
                                  std::uint64_t budget = 10'000'000);

// Streaming enumeration of all reduced words (empty word first) in
// letter_key depth-first order; f receives the current letter vector,
// which it must not retain.
template <class F>
void visit_reduced_words(int rank, int max_len, F&& f) {
  std::vector<int> cur;
  cur.reserve(max_len > 0 ? max_len : 0);
  f(static_cast<const std::vector<int>&>(cur));
  if (max_len < 1) return;
  std::vector<int> alphabet;
  for (int i = 1; i <= rank; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  auto rec = [&](auto&& self) -> void {
    for (int letter : alphabet) {
      if (!cur.empty() && cur.back() == -letter) continue;  // keep reduced
      cur.push_back(letter);
      f(static_cast<const std::vector<int>&>(cur));
      if (static_cast<int>(cur.size()) < max_len) self(self);
      cur.pop_back();
    }
  };
  rec(rec);
}

// True if `letters` is the canonical representative of its class.
bool is_canonical_class_rep(const std::vector<int>& letters);

}  // namespace thurston
