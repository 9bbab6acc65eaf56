#include "rackenum/word.hpp"

#include <algorithm>

namespace rackenum {

Word::Word(std::span<Letter const> letters) {
  letters_.reserve(letters.size());
  for (auto y : letters) {
    push_back(y);
  }
}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<Letter const>(letters.begin(), letters.size())) {}

Word& Word::push_back(Letter y) {
  if (!letters_.empty() && cancels(letters_.back(), y)) {
    letters_.pop_back();
  } else {
    letters_.push_back(y);
  }
  return *this;
}

Word Word::inverse() const {
  Word result;
  result.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    result.letters_.push_back(it->inverse());
  }
  return result;
}

Word operator*(Word const& lhs, Word const& rhs) {
  Word result = lhs;
  for (auto y : rhs.letters_) {
    result.push_back(y);
  }
  return result;
}

Word reduce_word(std::span<Letter const> raw) { return Word(raw); }

Word invert_word(Word const& w) { return w.inverse(); }

Word cyclically_reduce(Word const& w) {
  auto letters = w.letters();
  std::size_t first = 0;
  std::size_t last = letters.size();
  while (last - first >= 2 && cancels(letters[first], letters[last - 1])) {
    ++first;
    --last;
  }
  return Word(letters.subspan(first, last - first));
}

bool shortlex_less(Word const& lhs, Word const& rhs, std::size_t generator_count) {
  if (lhs.size() != rhs.size()) {
    return lhs.size() < rhs.size();
  }
  return std::lexicographical_compare(
      lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), [generator_count](Letter a, Letter b) {
        return a.rank(generator_count) < b.rank(generator_count);
      });
}

namespace {

// Rotations of a cyclically reduced word are themselves reduced, so the
// letters can be copied without another reduction pass.
void consider_rotations(Word const& cyclic, std::size_t generator_count, Word& best,
                        bool& have_best) {
  auto letters = cyclic.letters();
  std::vector<Letter> rotated(letters.size());
  for (std::size_t shift = 0; shift < letters.size(); ++shift) {
    std::rotate_copy(letters.begin(), letters.begin() + shift, letters.end(), rotated.begin());
    Word candidate(rotated);
    if (!have_best || shortlex_less(candidate, best, generator_count)) {
      best = std::move(candidate);
      have_best = true;
    }
  }
}

}  // namespace

Word minimal_cyclic_representative(Word const& w, std::size_t generator_count) {
  if (w.empty()) {
    return w;
  }
  Word best;
  bool have_best = false;
  consider_rotations(cyclically_reduce(w), generator_count, best, have_best);
  consider_rotations(cyclically_reduce(w.inverse()), generator_count, best, have_best);
  return best;
}

std::string to_string(Word const& w, std::span<std::string const> names) {
  std::string out;
  for (auto y : w) {
    if (!out.empty()) {
      out += ' ';
    }
    if (y.inverted) {
      out += '~';
    }
    out += y.generator < names.size() ? names[y.generator] : "x" + std::to_string(y.generator + 1);
  }
  return out;
}

}  // namespace rackenum
