#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rackenum/enumerate.hpp"
#include "rackenum/presentation.hpp"
#include "rackenum/rack_table.hpp"
#include "rackenum/word.hpp"

namespace testing {

using namespace rackenum;

inline std::string fixture_path(std::string const& name) {
  return std::string(RACKENUM_FIXTURE_DIR) + "/" + name;
}

inline std::string read_text(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Presentation load_fixture(std::string const& name) {
  return parse_presentation(read_text(fixture_path(name)));
}

inline Presentation worked_example() {
  return parse_presentation(
      "gens a b\nrel a^[b a] = b\nrel b^[b a] = a\nrel a^[b b] = a\nrel b^[a a] = b\n");
}

// Words in the "a ~b" notation over generators a, b, c, ...
inline Word w(std::string const& text) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inv = tok[0] == '~';
    letters.push_back({static_cast<Generator>(tok[inv ? 1 : 0] - 'a'), inv});
  }
  return Word(letters);
}

inline std::vector<Letter> raw(std::string const& text) {
  std::vector<Letter> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inv = tok[0] == '~';
    letters.push_back({static_cast<Generator>(tok[inv ? 1 : 0] - 'a'), inv});
  }
  return letters;
}

inline std::vector<std::string> abc(std::size_t g) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g; ++i) {
    names.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  return names;
}

// Random presentation: g <= 3, at most 4 relations, exponents of length 1..4.
inline Presentation random_presentation(std::mt19937_64& rng) {
  Presentation p;
  auto g = static_cast<Generator>(1 + rng() % 3);
  p.generator_names = abc(g);
  auto relations = rng() % 5;
  for (std::size_t k = 0; k < relations; ++k) {
    std::vector<Letter> letters;
    auto len = 1 + rng() % 4;
    for (std::size_t j = 0; j < len; ++j) {
      letters.push_back({static_cast<Generator>(rng() % g), rng() % 2 == 1});
    }
    Word e(letters);
    if (e.empty()) {
      e = Word{Letter{static_cast<Generator>(rng() % g), false}};
    }
    p.relations.push_back({static_cast<Generator>(rng() % g), e,
                           static_cast<Generator>(rng() % g)});
  }
  p.quandle = rng() % 2 == 1;
  return p;
}

// A finite rack given by its right translations: act[y][x] = x ▷ y.
struct SmallRack {
  std::size_t n = 0;
  std::vector<std::vector<std::uint8_t>> act;
  std::vector<std::vector<std::uint8_t>> inv;
};

// Every rack on {0..n-1}: each right translation is a permutation, then R2 is
// checked directly. Built independently of the library.
inline std::vector<SmallRack> all_racks(std::size_t n) {
  std::vector<std::uint8_t> base(n);
  for (std::size_t i = 0; i < n; ++i) {
    base[i] = static_cast<std::uint8_t>(i);
  }
  std::vector<std::vector<std::uint8_t>> perms;
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  std::vector<SmallRack> out;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    SmallRack r;
    r.n = n;
    for (std::size_t y = 0; y < n; ++y) {
      r.act.push_back(perms[choice[y]]);
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        for (std::size_t z = 0; z < n && ok; ++z) {
          ok = r.act[z][r.act[y][x]] == r.act[r.act[z][y]][r.act[z][x]];
        }
      }
    }
    if (ok) {
      r.inv.assign(n, std::vector<std::uint8_t>(n));
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
          r.inv[y][r.act[y][x]] = static_cast<std::uint8_t>(x);
        }
      }
      out.push_back(std::move(r));
    }
    std::size_t k = 0;
    while (k < n && ++choice[k] == perms.size()) {
      choice[k++] = 0;
    }
    if (k == n) {
      break;
    }
  }
  return out;
}

// x^w in a small rack where the letters of w act through the generator images.
inline std::size_t act_word(SmallRack const& q, std::size_t x, Word const& word,
                            std::vector<std::size_t> const& images) {
  for (auto l : word) {
    auto y = images[l.generator];
    x = l.inverted ? q.inv[y][x] : q.act[y][x];
  }
  return x;
}

// Assignments of generators into q that satisfy every relation (axioms included).
inline std::size_t count_colorings(Presentation const& p, SmallRack const& q) {
  auto relations = p.relations;
  for (auto const& r : inject_axioms(p)) {
    relations.push_back(r);
  }
  auto g = p.generator_count();
  std::vector<std::size_t> images(g, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (auto const& r : relations) {
      if (act_word(q, images[r.base], r.exponent, images) != images[r.target]) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
    std::size_t k = 0;
    while (k < g && ++images[k] == q.n) {
      images[k++] = 0;
    }
    if (k == g) {
      break;
    }
  }
  return count;
}

// Homomorphisms from an enumerated rack into q, counted over generator images
// that extend to a map respecting the operation table.
inline std::size_t count_homomorphisms(EnumTable const& t, RackTable const& rt,
                                       SmallRack const& q) {
  auto g = t.generator_count();
  std::vector<RepresentativeWord> reps;
  std::vector<Generator> seed_gen;
  for (Row r : rt.elements) {
    auto rep = representative_word(t, r);
    for (auto const& s : t.seeds()) {
      if (s.row == rep.seed) {
        seed_gen.push_back(*s.generator);
      }
    }
    reps.push_back(std::move(rep));
  }
  std::vector<std::size_t> images(g, 0);
  std::size_t count = 0;
  std::vector<std::size_t> phi(rt.size());
  while (true) {
    for (std::size_t i = 0; i < rt.size(); ++i) {
      phi[i] = act_word(q, images[seed_gen[i]], reps[i].word, images);
    }
    bool ok = true;
    // Generator rows must map to their own images.
    for (auto const& s : t.seeds()) {
      auto pos = std::find(rt.elements.begin(), rt.elements.end(), t.rep(s.row));
      if (phi[pos - rt.elements.begin()] != images[*s.generator]) {
        ok = false;
      }
    }
    for (std::size_t i = 0; i < rt.size() && ok; ++i) {
      for (std::size_t j = 0; j < rt.size() && ok; ++j) {
        ok = phi[rt.apply(i, j)] == q.act[phi[j]][phi[i]];
      }
    }
    count += ok ? 1 : 0;
    std::size_t k = 0;
    while (k < g && ++images[k] == q.n) {
      images[k++] = 0;
    }
    if (k == g) {
      break;
    }
  }
  return count;
}

}  // namespace testing
