#include "rackenum/enum_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace rackenum {

namespace {

void require(bool condition, char const* message) {
  if (!condition) {
    throw std::logic_error(message);
  }
}

}  // namespace

std::string to_string(TraceWord const& t, std::span<std::string const> names) {
  std::string base = t.base ? (*t.base < names.size() ? names[*t.base]
                                                      : "x" + std::to_string(*t.base + 1))
                            : std::string("S");
  if (t.exponent.empty()) {
    return base;
  }
  return base + "^[" + to_string(t.exponent, names) + "]";
}

EnumTable::EnumTable(std::size_t generator_count, std::size_t seed_count, bool keep_trace,
                     bool coset_seed)
    : g_(generator_count), keep_trace_(keep_trace), coset_seed_(coset_seed) {
  require(g_ >= 1, "enumeration table needs at least one generator");
  require(seed_count >= 1, "enumeration table needs at least one seed row");
  require(coset_seed || seed_count == g_, "element tables seed one row per generator");
  rho_.push_back(kUndefined);
  action_.assign(2 * g_, kUndefined);
  if (keep_trace_) {
    trace_.emplace_back();
  }
  for (std::size_t i = 1; i <= seed_count; ++i) {
    Row r = new_row();
    auto generator =
        coset_seed_ ? std::nullopt : std::optional<Generator>(static_cast<Generator>(i - 1));
    seeds_.push_back({r, generator});
    if (keep_trace_) {
      trace_[r].base = generator;
    }
  }
}

EnumTable EnumTable::compacted() const {
  auto live = live_rows();
  std::vector<Row> renumber(omega() + 1, kUndefined);
  for (std::size_t p = 0; p < live.size(); ++p) {
    renumber[live[p]] = static_cast<Row>(p + 1);
  }
  EnumTable out;
  out.g_ = g_;
  out.keep_trace_ = keep_trace_;
  out.coset_seed_ = coset_seed_;
  out.rho_.push_back(kUndefined);
  out.action_.assign(2 * g_ * (live.size() + 1), kUndefined);
  if (keep_trace_) {
    out.trace_.emplace_back();
  }
  for (Row old : live) {
    Row r = renumber[old];
    out.rho_.push_back(r);
    for (std::size_t c = 0; c < 2 * g_; ++c) {
      Row target = action_[old * 2 * g_ + c];
      out.action_[r * 2 * g_ + c] = target == kUndefined ? kUndefined : renumber[target];
    }
    if (keep_trace_) {
      out.trace_.push_back(trace_[old]);
    }
  }
  for (auto const& s : seeds_) {
    if (rho_[s.row] == s.row) {
      out.seeds_.push_back({renumber[s.row], s.generator});
    }
  }
  out.counters_ = counters_;
  out.max_live_hint_ = static_cast<Row>(live.size());
  return out;
}

Row EnumTable::new_row() {
  Row r = static_cast<Row>(rho_.size());
  rho_.push_back(r);
  action_.resize(action_.size() + 2 * g_, kUndefined);
  if (keep_trace_) {
    trace_.emplace_back();
  }
  ++counters_.live;
  counters_.peak_live = std::max(counters_.peak_live, counters_.live);
  max_live_hint_ = r;
  return r;
}

Row EnumTable::max_live() const {
  while (max_live_hint_ > 0 && rho_[max_live_hint_] != max_live_hint_) {
    --max_live_hint_;
  }
  return max_live_hint_;
}

std::vector<Row> EnumTable::live_rows() const {
  std::vector<Row> out;
  out.reserve(counters_.live);
  for (Row i = 1; i <= omega(); ++i) {
    if (rho_[i] == i) {
      out.push_back(i);
    }
  }
  return out;
}

bool EnumTable::row_complete(Row i) const {
  auto first = action_.begin() + static_cast<std::ptrdiff_t>(i * 2 * g_);
  return std::find(first, first + static_cast<std::ptrdiff_t>(2 * g_), kUndefined) ==
         first + static_cast<std::ptrdiff_t>(2 * g_);
}

bool EnumTable::is_complete() const {
  for (Row i = 1; i <= omega(); ++i) {
    if (rho_[i] == i && !row_complete(i)) {
      return false;
    }
  }
  return true;
}

Row EnumTable::define(Row i, Letter y) {
  require(is_live(i), "define: row is not live");
  require(!defined(i, y), "define: entry already defined");
  Row r = new_row();
  action_[slot(i, y)] = r;
  action_[slot(r, y.inverse())] = i;
  if (keep_trace_) {
    trace_[r] = trace_[i];
    trace_[r].exponent.push_back(y);
  }
  ++counters_.definitions;
  return r;
}

Row EnumTable::rep(Row i) const {
  Row j = i;
  while (rho_[j] < j) {
    j = rho_[j];
  }
  return j;
}

void EnumTable::update(Row i) {
  Row least = rep(i);
  Row n = i;
  Row m = rho_[n];
  while (m < n) {
    rho_[n] = least;
    n = m;
    m = rho_[n];
  }
}

void EnumTable::merge(CoincidenceQueue& queue, Row m, Row n) {
  Row mu = rep(m);
  Row nu = rep(n);
  if (mu == nu) {
    return;
  }
  Row dying = std::max(mu, nu);
  queue.entries.push_back(dying);
  rho_[dying] = std::min(mu, nu);
  --counters_.live;
}

void EnumTable::deduction(Row i, Letter y, Row j) {
  require(!defined(i, y) && !defined(j, y.inverse()), "deduction: entry already defined");
  action_[slot(i, y)] = j;
  action_[slot(j, y.inverse())] = i;
  ++counters_.deductions;
}

ScanOutcome EnumTable::scan(Row i, Word const& w, Row j) {
  require(is_live(i) && is_live(j), "scan: endpoints must be live");
  require(!w.empty(), "scan: word must be nonempty");
  ++counters_.scans;
  ScanOutcome outcome;
  // f and b are the 1-based forward and backward positions in w.
  std::size_t f = 1;
  std::size_t b = w.size();
  Row k = i;
  Row l = j;
  while (f <= b) {
    while (f <= b && defined(k, w[f - 1])) {
      k = at(k, w[f - 1]);
      ++f;
    }
    while (f <= b && defined(l, w[b - 1].inverse())) {
      l = at(l, w[b - 1].inverse());
      --b;
    }
    if (f < b) {
      define(k, w[f - 1]);
      ++outcome.definitions;
    } else if (f == b) {
      deduction(k, w[f - 1], l);
      outcome.kind = ScanOutcome::Kind::DeductionMade;
      outcome.from = k;
      outcome.letter = w[f - 1];
      outcome.to = l;
      break;
    } else if (k != l) {
      coincidence(k, l);
      outcome.kind = ScanOutcome::Kind::CoincidenceResolved;
      outcome.from = k;
      outcome.to = l;
    } else {
      break;
    }
  }
  return outcome;
}

void EnumTable::coincidence(Row m, Row n) {
  require(m != n && is_live(m) && is_live(n), "coincidence: needs two distinct live rows");
  ++counters_.coincidences;
  CoincidenceQueue queue;
  merge(queue, m, n);
  while (queue.cursor < queue.entries.size()) {
    Row d = queue.entries[queue.cursor++];
    for (std::size_t column = 0; column < 2 * g_; ++column) {
      Letter x = Letter::from_column(column, g_);
      Row e = at(d, x);
      if (e == kUndefined) {
        continue;
      }
      clear_entry(d, x);
      clear_entry(e, x.inverse());
      Row delta = rep(d);
      update(d);
      Row epsilon = rep(e);
      update(e);
      if (defined(delta, x)) {
        merge(queue, epsilon, at(delta, x));
      } else if (defined(epsilon, x.inverse())) {
        merge(queue, delta, at(epsilon, x.inverse()));
      } else {
        set_entry(delta, x, epsilon);
        set_entry(epsilon, x.inverse(), delta);
      }
    }
  }
}

std::optional<Row> EnumTable::apply_word(Row i, Word const& w) const {
  Row k = i;
  for (auto y : w) {
    k = at(k, y);
    if (k == kUndefined) {
      return std::nullopt;
    }
  }
  return k;
}

std::string EnumTable::render(std::span<std::string const> names) const {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (std::size_t c = 0; c < 2 * g_; ++c) {
    Letter y = Letter::from_column(c, g_);
    header.push_back((y.inverted ? "~" : "") + names[y.generator]);
  }
  header.emplace_back("tau");
  header.emplace_back("rho");
  cells.push_back(std::move(header));
  for (Row i = 1; i <= omega(); ++i) {
    std::vector<std::string> line{std::to_string(i)};
    for (std::size_t c = 0; c < 2 * g_; ++c) {
      Row v = action_[i * 2 * g_ + c];
      line.push_back(v == kUndefined ? "" : std::to_string(v));
    }
    line.push_back(keep_trace_ ? to_string(trace_[i], names) : "");
    line.push_back(std::to_string(rho_[i]));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (auto const& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::string out;
  for (auto const& line : cells) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) {
        text.append(width[c] - line[c].size() + 2, ' ');
      }
    }
    while (!text.empty() && text.back() == ' ') {
      text.pop_back();
    }
    out += text + '\n';
  }
  return out;
}

std::vector<Violation> PropertyValidator::check(EnumTable const& t) {
  std::vector<Violation> out;
  auto const width = 2 * t.generator_count();
  auto const omega = t.omega();
  auto const& action = t.raw_action();
  auto const& rho = t.raw_rho();

  if (!t.is_live(1)) {
    out.push_back({"property 1", "row 1 is dead"});
  }
  if (t.keeps_trace()) {
    for (auto const& s : t.seeds()) {
      if (s.row <= omega && !(t.trace(s.row) == TraceWord{s.generator, Word{}})) {
        out.push_back({"property 1", "row " + std::to_string(s.row) + " has the wrong trace"});
      }
    }
  }
  for (Row i = 1; i <= omega; ++i) {
    if (rho[i] > i || rho[i] == kUndefined) {
      out.push_back({"rho", "rho(" + std::to_string(i) + ") = " + std::to_string(rho[i])});
    }
    auto const* row = action.data() + std::size_t{i} * width;
    for (std::size_t c = 0; c < width; ++c) {
      Row j = row[c];
      if (j == kUndefined) {
        continue;
      }
      if (j > omega) {
        out.push_back({"property 2", "entry of row " + std::to_string(i) + " out of range"});
        continue;
      }
      auto partner = c < width / 2 ? c + width / 2 : c - width / 2;
      if (action[std::size_t{j} * width + partner] != i) {
        out.push_back({"property 2", "row " + std::to_string(i) + " column " +
                                         std::to_string(c) + " -> " + std::to_string(j) +
                                         " has no inverse entry"});
      }
      if (rho[i] != i || rho[j] != j) {
        out.push_back({"dead entry", "entry " + std::to_string(i) + " -> " + std::to_string(j) +
                                         " touches a dead row"});
      }
    }
  }

  if (stamp_.size() < std::size_t{omega} + 1) {
    stamp_.resize(std::size_t{omega} + 1, 0);
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  stack_.clear();
  for (auto const& s : t.seeds()) {
    if (t.is_live(s.row) && stamp_[s.row] != epoch_) {
      stamp_[s.row] = epoch_;
      stack_.push_back(s.row);
    }
  }
  while (!stack_.empty()) {
    Row i = stack_.back();
    stack_.pop_back();
    auto const* row = action.data() + std::size_t{i} * width;
    for (std::size_t c = 0; c < width; ++c) {
      Row j = row[c];
      if (j != kUndefined && j <= omega && stamp_[j] != epoch_) {
        stamp_[j] = epoch_;
        stack_.push_back(j);
      }
    }
  }
  for (Row i = 1; i <= omega; ++i) {
    if (rho[i] == i && stamp_[i] != epoch_) {
      out.push_back({"property 4", "live row " + std::to_string(i) + " is unreachable"});
    }
  }
  return out;
}

std::vector<Violation> validate_properties(EnumTable const& t) {
  return PropertyValidator{}.check(t);
}

}  // namespace rackenum
