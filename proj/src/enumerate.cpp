#include "rackenum/enumerate.hpp"

#include <algorithm>
#include <chrono>

#include "rackenum/error.hpp"

namespace rackenum {

std::string to_string(EnumStatus s) {
  switch (s) {
    case EnumStatus::Completed:
      return "completed";
    case EnumStatus::RunLimitExceeded:
      return "run_limit_exceeded";
    case EnumStatus::Incomplete:
      return "incomplete";
  }
  return "unknown";
}

double Metrics::max_live_over_order() const {
  return order == 0 ? 0.0 : static_cast<double>(max_live) / static_cast<double>(order);
}

double Metrics::total_defined_over_order() const {
  return order == 0 ? 0.0 : static_cast<double>(total_defined) / static_cast<double>(order);
}

void add_secondary(std::vector<SecondaryWord>& words, Word const& w, bool minimal,
                   std::size_t generator_count) {
  if (w.empty()) {
    return;
  }
  SecondaryWord candidate(minimal ? minimal_cyclic_representative(w, generator_count) : w);
  if (std::find(words.begin(), words.end(), candidate) == words.end()) {
    words.push_back(std::move(candidate));
  }
}

namespace {

std::vector<SecondaryWord> derive_all(std::vector<PrimaryRelation> const& relations,
                                      bool minimal, std::size_t generator_count) {
  std::vector<SecondaryWord> out;
  for (auto const& rel : relations) {
    if (rel.exponent.empty()) {
      throw Error("relation with an empty exponent cannot be scanned");
    }
    if (auto w = derive_secondary(rel)) {
      add_secondary(out, w->word(), minimal, generator_count);
    }
  }
  return out;
}

void notify(EnumOptions const& opts, EnumTable const& t) {
  if (opts.observer) {
    opts.observer(t);
  }
}

// Main loop over live rows, starting at row 1.
EnumStatus secondary_loop(EnumTable& t, std::vector<SecondaryWord> const& secondary,
                          EnumOptions const& opts) {
  auto const g = t.generator_count();
  std::uint64_t i = 1;
  while (i <= t.max_live() && i <= opts.run_limit) {
    Row row = static_cast<Row>(i);
    for (auto const& w : secondary) {
      if (!t.is_live(row)) {
        break;
      }
      t.scan(row, w.word(), row);
      notify(opts, t);
    }
    if (opts.ward && t.is_live(row)) {
      for (std::size_t c = 0; c < 2 * g; ++c) {
        Letter y = Letter::from_column(c, g);
        if (!t.defined(row, y)) {
          t.define(row, y);
          notify(opts, t);
        }
      }
    }
    ++i;
  }
  if (i > t.max_live()) {
    return t.is_complete() ? EnumStatus::Completed : EnumStatus::Incomplete;
  }
  return EnumStatus::RunLimitExceeded;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::pair<std::vector<SecondaryWord>, EnumTable> init(Presentation const& p,
                                                      bool minimal_secondary,
                                                      bool keep_trace) {
  p.validate();
  if (p.generator_count() == 0) {
    throw Error("presentation has no generators");
  }
  auto secondary = derive_all(inject_axioms(p), minimal_secondary, p.generator_count());
  return {std::move(secondary), EnumTable(p.generator_count(), p.generator_count(), keep_trace)};
}

Metrics collect_metrics(EnumTable const& t, EnumStatus status, double wall_time_s) {
  Metrics m;
  m.status = status;
  m.order = t.live_count();
  m.max_live = t.counters().peak_live;
  m.total_defined = t.omega();
  m.scans = t.counters().scans;
  m.deductions = t.counters().deductions;
  m.coincidences = t.counters().coincidences;
  m.wall_time_s = wall_time_s;
  return m;
}

EnumResult enumerate(Presentation const& p, EnumOptions const& opts) {
  if (opts.run_limit < 1) {
    throw Error("run limit must be at least 1");
  }
  auto start = std::chrono::steady_clock::now();
  auto [secondary, table] = init(p, opts.minimal_secondary, opts.keep_trace);
  notify(opts, table);
  for (auto const& rel : inject_axioms(p)) {
    table.scan(table.rep(rel.base + 1), rel.exponent, table.rep(rel.target + 1));
    notify(opts, table);
  }
  auto status = secondary_loop(table, secondary, opts);
  auto metrics = collect_metrics(table, status, seconds_since(start));
  return EnumResult{status, std::move(table), std::move(secondary), metrics, false};
}

EnumResult enumerate_cosets(Presentation const& p, SubrackSpec const& sub,
                            EnumOptions const& opts) {
  if (opts.run_limit < 1) {
    throw Error("run limit must be at least 1");
  }
  if (sub.generators.empty()) {
    throw Error("subrack needs at least one generator");
  }
  auto start = std::chrono::steady_clock::now();
  p.validate();
  auto const g = p.generator_count();
  std::vector<Word> actions;
  for (auto const& s : sub.generators) {
    if (s.base >= g) {
      throw Error("subrack generator references an unknown generator");
    }
    for (auto y : s.exponent) {
      if (y.generator >= g) {
        throw Error("subrack generator references an unknown generator");
      }
    }
    Word w = s.exponent.inverse();
    w.push_back(Letter{s.base, false});
    actions.push_back(w * s.exponent);
  }

  auto secondary = derive_all(inject_axioms(p), opts.minimal_secondary, g);
  for (std::size_t s = 0; s < actions.size(); ++s) {
    for (std::size_t u = 0; u < actions.size(); ++u) {
      if (s != u) {
        add_secondary(secondary, actions[s] * actions[u].inverse(), opts.minimal_secondary, g);
      }
    }
  }

  EnumTable table(g, 1, opts.keep_trace, /*coset_seed=*/true);
  notify(opts, table);
  for (auto const& w : actions) {
    table.scan(table.rep(1), w, table.rep(1));
    notify(opts, table);
  }
  auto status = secondary_loop(table, secondary, opts);
  auto metrics = collect_metrics(table, status, seconds_since(start));
  return EnumResult{status, std::move(table), std::move(secondary), metrics, true};
}

SubrackSpec parse_subrack(Presentation const& p, std::string_view text) {
  SubrackSpec out;
  std::size_t column = 1;
  while (true) {
    auto semi = text.find(';');
    auto item = text.substr(0, semi);
    auto first = item.find_first_not_of(" \t");
    if (first != std::string_view::npos) {
      auto last = item.find_last_not_of(" \t");
      auto element = item.substr(first, last - first + 1);
      auto caret = element.find('^');
      auto name = element.substr(0, caret);
      auto g = p.find_generator(name);
      if (!g) {
        throw ParseError(1, column + first, "unknown generator '" + std::string(name) + "'");
      }
      SubrackGenerator s{*g, Word{}};
      if (caret != std::string_view::npos) {
        auto rest = element.substr(caret + 1);
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
          throw ParseError(1, column + first + caret + 1,
                           "subrack element must look like <gen>^[<word>]");
        }
        try {
          s.exponent = parse_word(p, rest.substr(1, rest.size() - 2));
        } catch (ParseError const& e) {
          throw ParseError(1, column + first + caret + 1 + e.column(), e.message());
        }
      }
      out.generators.push_back(std::move(s));
    } else if (semi != std::string_view::npos || out.generators.empty()) {
      throw ParseError(1, column, "empty subrack element");
    }
    if (semi == std::string_view::npos) {
      break;
    }
    column += semi + 1;
    text = text.substr(semi + 1);
  }
  return out;
}

}  // namespace rackenum
