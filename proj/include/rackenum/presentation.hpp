#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rackenum/word.hpp"

namespace rackenum {

/// The relation x_base^exponent = x_target.
struct PrimaryRelation {
  Generator base = 0;
  Word exponent;
  Generator target = 0;

  friend bool operator==(PrimaryRelation const&, PrimaryRelation const&) = default;
};

/// A reduced nonempty word w standing for the universal relation x^w = x.
class SecondaryWord {
 public:
  /// Throws rackenum::Error if `w` is empty.
  explicit SecondaryWord(Word w);

  Word const& word() const noexcept { return word_; }

  friend bool operator==(SecondaryWord const&, SecondaryWord const&) = default;

 private:
  Word word_;
};

/// A rack presentation ⟨S | R⟩ with optional quandle / n-quandle axiom flags.
///
/// The relation list holds only the relations as written; the axiom schemata
/// are expanded on demand by inject_axioms().
struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<PrimaryRelation> relations;
  bool quandle = false;
  std::optional<unsigned> nquandle;

  std::size_t generator_count() const noexcept { return generator_names.size(); }

  /// Index of `name`, or nullopt if it is not a generator.
  std::optional<Generator> find_generator(std::string_view name) const;

  /// Throws rackenum::Error if names repeat or an index is out of range.
  void validate() const;

  friend bool operator==(Presentation const&, Presentation const&) = default;
};

/// Arc-labelled link diagram data. Each crossing is (over arc, incoming
/// under arc, outgoing under arc), 1-based.
struct CrossingList {
  std::size_t arcs = 0;
  std::vector<std::array<std::size_t, 3>> crossings;
};

/// The word ū · x_base · u · x̄_target, reduced; nullopt when it cancels to ε.
std::optional<SecondaryWord> derive_secondary(PrimaryRelation const& rel);

/// The presentation's relations followed by a^a = a for every generator when
/// the quandle flag is set, then a^{b^n} = a for every ordered pair of
/// distinct generators when the n-quandle flag is set.
std::vector<PrimaryRelation> inject_axioms(Presentation const& p);

/// One generator per arc and the relation x_j^{x_i} = x_k per crossing, as an
/// n-quandle presentation.
Presentation build_link_presentation(CrossingList const& c, unsigned n);

Presentation parse_presentation(std::string_view text);
std::string render_presentation(Presentation const& p);

/// Parses a space separated letter list such as "b ~a c" against `p`.
Word parse_word(Presentation const& p, std::string_view text);

std::string to_string(PrimaryRelation const& rel, Presentation const& p);

}  // namespace rackenum
