#include "rackenum/presentation.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "rackenum/error.hpp"

namespace rackenum {

SecondaryWord::SecondaryWord(Word w) : word_(std::move(w)) {
  if (word_.empty()) {
    throw Error("secondary word must be nonempty");
  }
}

std::optional<Generator> Presentation::find_generator(std::string_view name) const {
  for (std::size_t i = 0; i < generator_names.size(); ++i) {
    if (generator_names[i] == name) {
      return static_cast<Generator>(i);
    }
  }
  return std::nullopt;
}

void Presentation::validate() const {
  std::set<std::string_view> seen;
  for (auto const& name : generator_names) {
    if (name.empty()) {
      throw Error("empty generator name");
    }
    if (!seen.insert(name).second) {
      throw Error("duplicate generator name '" + name + "'");
    }
  }
  auto const g = generator_count();
  for (auto const& rel : relations) {
    if (rel.base >= g || rel.target >= g) {
      throw Error("relation references a generator outside the presentation");
    }
    for (auto y : rel.exponent) {
      if (y.generator >= g) {
        throw Error("relation exponent references a generator outside the presentation");
      }
    }
  }
  if (nquandle && *nquandle < 2) {
    throw Error("n-quandle exponent must be at least 2");
  }
}

std::optional<SecondaryWord> derive_secondary(PrimaryRelation const& rel) {
  Word w = rel.exponent.inverse();
  w.push_back(Letter{rel.base, false});
  w = w * rel.exponent;
  w.push_back(Letter{rel.target, true});
  if (w.empty()) {
    return std::nullopt;
  }
  return SecondaryWord(std::move(w));
}

std::vector<PrimaryRelation> inject_axioms(Presentation const& p) {
  if (p.nquandle && *p.nquandle < 2) {
    throw Error("n-quandle exponent must be at least 2");
  }
  std::vector<PrimaryRelation> out = p.relations;
  auto const g = static_cast<Generator>(p.generator_count());
  if (p.quandle || p.nquandle) {
    for (Generator a = 0; a < g; ++a) {
      out.push_back({a, Word{Letter{a, false}}, a});
    }
  }
  if (p.nquandle) {
    for (Generator a = 0; a < g; ++a) {
      for (Generator b = 0; b < g; ++b) {
        if (a == b) {
          continue;
        }
        std::vector<Letter> power(*p.nquandle, Letter{b, false});
        out.push_back({a, Word(power), a});
      }
    }
  }
  return out;
}

Presentation build_link_presentation(CrossingList const& c, unsigned n) {
  if (n < 2) {
    throw Error("n-quandle exponent must be at least 2");
  }
  if (c.arcs == 0) {
    throw Error("link presentation needs at least one arc");
  }
  Presentation p;
  for (std::size_t i = 1; i <= c.arcs; ++i) {
    p.generator_names.push_back("x" + std::to_string(i));
  }
  for (auto const& [over, under_in, under_out] : c.crossings) {
    for (auto arc : {over, under_in, under_out}) {
      if (arc < 1 || arc > c.arcs) {
        throw Error("crossing references arc " + std::to_string(arc) + " of " +
                    std::to_string(c.arcs));
      }
    }
    p.relations.push_back({static_cast<Generator>(under_in - 1),
                           Word{Letter{static_cast<Generator>(over - 1), false}},
                           static_cast<Generator>(under_out - 1)});
  }
  p.nquandle = n;
  return p;
}

namespace {

bool is_name_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_';
}

// Cursor over one line; columns are 1-based in error messages.
class LineReader {
 public:
  LineReader(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_space() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])) != 0) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= line_.size();
  }

  bool peek(char ch) {
    skip_space();
    return pos_ < line_.size() && line_[pos_] == ch;
  }

  void expect(char ch) {
    if (!peek(ch)) {
      fail(std::string("expected '") + ch + "'");
    }
    ++pos_;
  }

  std::string_view name() {
    skip_space();
    auto start = pos_;
    while (pos_ < line_.size() && is_name_char(line_[pos_])) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a name");
    }
    return line_.substr(start, pos_ - start);
  }

  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_no_; }

  [[noreturn]] void fail(std::string const& message) const {
    throw ParseError(line_no_, pos_ + 1, message);
  }

  [[noreturn]] void fail_at(std::size_t column, std::string const& message) const {
    throw ParseError(line_no_, column, message);
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

Generator lookup(Presentation const& p, LineReader& in) {
  in.skip_space();
  auto column = in.column();
  auto name = in.name();
  auto g = p.find_generator(name);
  if (!g) {
    in.fail_at(column, "unknown generator '" + std::string(name) + "'");
  }
  return *g;
}

std::vector<Letter> parse_letters(Presentation const& p, LineReader& in, char terminator) {
  std::vector<Letter> letters;
  while (!in.at_end() && !in.peek(terminator)) {
    bool inverted = false;
    if (in.peek('~')) {
      in.expect('~');
      inverted = true;
    }
    letters.push_back({lookup(p, in), inverted});
  }
  return letters;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool have_gens = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!raw.empty() && raw.back() == '\r') {
      raw.remove_suffix(1);
    }
    LineReader in(strip_comment(raw), line_no);
    if (in.at_end()) {
      continue;
    }
    auto keyword_column = in.column();
    auto keyword = in.name();
    if (!have_gens && keyword != "gens") {
      in.fail_at(keyword_column, "expected 'gens' before any other declaration");
    }
    if (keyword == "gens") {
      if (have_gens) {
        in.fail_at(keyword_column, "duplicate 'gens' line");
      }
      have_gens = true;
      while (!in.at_end()) {
        in.skip_space();
        auto column = in.column();
        auto name = in.name();
        if (p.find_generator(name)) {
          in.fail_at(column, "duplicate generator '" + std::string(name) + "'");
        }
        p.generator_names.emplace_back(name);
      }
      if (p.generator_names.empty()) {
        in.fail("'gens' needs at least one generator");
      }
    } else if (keyword == "quandle") {
      p.quandle = true;
    } else if (keyword == "nquandle") {
      in.skip_space();
      auto column = in.column();
      auto digits = in.name();
      unsigned n = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 2) {
        in.fail_at(column, "n-quandle exponent must be an integer >= 2");
      }
      p.nquandle = n;
    } else if (keyword == "rel") {
      PrimaryRelation rel;
      rel.base = lookup(p, in);
      in.expect('^');
      in.expect('[');
      auto exponent_column = in.column();
      auto letters = parse_letters(p, in, ']');
      if (in.at_end()) {
        in.fail_at(exponent_column, "malformed exponent: missing ']'");
      }
      in.expect(']');
      rel.exponent = Word(letters);
      in.expect('=');
      rel.target = lookup(p, in);
      if (!in.at_end()) {
        in.fail("unexpected trailing text");
      }
      p.relations.push_back(std::move(rel));
    } else {
      in.fail_at(keyword_column, "unknown declaration '" + std::string(keyword) + "'");
    }
    if (!in.at_end()) {
      in.fail("unexpected trailing text");
    }
  }
  if (!have_gens) {
    throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'gens' line");
  }
  return p;
}

Word parse_word(Presentation const& p, std::string_view text) {
  LineReader in(text, 1);
  auto letters = parse_letters(p, in, '\0');
  return Word(letters);
}

std::string to_string(PrimaryRelation const& rel, Presentation const& p) {
  return p.generator_names[rel.base] + "^[" + to_string(rel.exponent, p.generator_names) +
         "] = " + p.generator_names[rel.target];
}

std::string render_presentation(Presentation const& p) {
  std::string out = "gens";
  for (auto const& name : p.generator_names) {
    out += ' ';
    out += name;
  }
  out += '\n';
  if (p.quandle) {
    out += "quandle\n";
  }
  if (p.nquandle) {
    out += "nquandle " + std::to_string(*p.nquandle) + "\n";
  }
  for (auto const& rel : p.relations) {
    out += "rel " + to_string(rel, p) + "\n";
  }
  return out;
}

}  // namespace rackenum
