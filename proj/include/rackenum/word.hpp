#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rackenum {

// Zero-based index into the generator list of a presentation.
using Generator = std::uint32_t;

/// A generator or its formal inverse, an element of S ∪ S̄.
struct Letter {
  Generator generator = 0;
  bool inverted = false;

  constexpr Letter inverse() const noexcept { return {generator, !inverted}; }

  /// Column of this letter in an enumeration table with `generator_count`
  /// generators: x_1..x_g first, then x̄_1..x̄_g.
  constexpr std::size_t column(std::size_t generator_count) const noexcept {
    return inverted ? generator_count + generator : generator;
  }

  static constexpr Letter from_column(std::size_t column,
                                      std::size_t generator_count) noexcept {
    return column < generator_count
               ? Letter{static_cast<Generator>(column), false}
               : Letter{static_cast<Generator>(column - generator_count), true};
  }

  /// Position in the order x_1 < ... < x_g < x̄_g < ... < x̄_1 used to pick
  /// minimal cyclic words.
  constexpr std::size_t rank(std::size_t generator_count) const noexcept {
    return inverted ? 2 * generator_count - 1 - generator : generator;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
};

constexpr bool cancels(Letter a, Letter b) noexcept {
  return a.generator == b.generator && a.inverted != b.inverted;
}

/// An element of the free group F(S), always stored freely reduced.
class Word {
 public:
  Word() = default;

  /// Reduces `letters` on construction.
  explicit Word(std::span<Letter const> letters);
  Word(std::initializer_list<Letter> letters);

  std::span<Letter const> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const;

  /// Appends one letter, cancelling against the last letter if possible.
  Word& push_back(Letter y);

  friend Word operator*(Word const& lhs, Word const& rhs);
  friend bool operator==(Word const&, Word const&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
Word reduce_word(std::span<Letter const> raw);

Word invert_word(Word const& w);

/// Strips letters from both ends while the first cancels the last.
Word cyclically_reduce(Word const& w);

/// The minimum, shortest first and then lexicographic under Letter::rank,
/// over all rotations of the cyclic reductions of w and of w̄.
Word minimal_cyclic_representative(Word const& w, std::size_t generator_count);

/// Lexicographic comparison under Letter::rank; shorter words sort first.
bool shortlex_less(Word const& lhs, Word const& rhs, std::size_t generator_count);

/// Space separated letters, inverses prefixed by `~`. Empty word renders as "".
std::string to_string(Word const& w, std::span<std::string const> names);

}  // namespace rackenum
