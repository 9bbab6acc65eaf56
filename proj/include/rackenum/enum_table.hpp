#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rackenum/presentation.hpp"
#include "rackenum/word.hpp"

namespace rackenum {

// Rows are 1-based; 0 marks an undefined table entry.
using Row = std::uint32_t;
inline constexpr Row kUndefined = 0;

/// The rack element x_base^exponent recorded for a row. A missing base
/// stands for the subrack Σ in coset enumeration.
struct TraceWord {
  std::optional<Generator> base;
  Word exponent;

  friend bool operator==(TraceWord const&, TraceWord const&) = default;
};

std::string to_string(TraceWord const& t, std::span<std::string const> names);

/// Pending coincidences: rows already killed whose entries still have to be
/// merged into their representatives.
struct CoincidenceQueue {
  std::vector<Row> entries;
  std::size_t cursor = 0;
};

struct ScanOutcome {
  enum class Kind { CompletedCorrectly, DeductionMade, CoincidenceResolved };

  Kind kind = Kind::CompletedCorrectly;
  std::size_t definitions = 0;
  // Deduction: from^letter = to. Coincidence: the rows from and to met.
  Row from = kUndefined;
  Row to = kUndefined;
  std::optional<Letter> letter;
};

/// A row created by initialisation, standing for a generator x_k (or for Σ
/// when `generator` is empty).
struct Seed {
  Row row = kUndefined;
  std::optional<Generator> generator;
};

struct EngineCounters {
  std::uint64_t scans = 0;
  std::uint64_t definitions = 0;
  std::uint64_t deductions = 0;
  std::uint64_t coincidences = 0;
  std::size_t live = 0;
  std::size_t peak_live = 0;
};

/// The enumeration table (ω, A, τ, ρ).
///
/// Rows 1..seed_count are created up front with τ(i) = x_i (or Σ for a
/// coset table). Rows are never recycled: a dead row keeps its ρ and τ but every
/// action entry touching it is removed once its coincidence is processed.
class EnumTable {
 public:
  EnumTable(std::size_t generator_count, std::size_t seed_count, bool keep_trace = true,
            bool coset_seed = false);

  std::size_t generator_count() const noexcept { return g_; }
  std::span<Seed const> seeds() const noexcept { return seeds_; }
  Row omega() const noexcept { return static_cast<Row>(rho_.size() - 1); }
  bool keeps_trace() const noexcept { return keep_trace_; }
  bool coset_seed() const noexcept { return coset_seed_; }

  bool is_live(Row i) const { return i >= 1 && i <= omega() && rho_[i] == i; }
  Row rho(Row i) const { return rho_[i]; }
  std::size_t live_count() const noexcept { return counters_.live; }
  Row max_live() const;
  std::vector<Row> live_rows() const;

  /// i^y, or kUndefined.
  Row at(Row i, Letter y) const { return action_[slot(i, y)]; }
  bool defined(Row i, Letter y) const { return at(i, y) != kUndefined; }
  bool row_complete(Row i) const;
  bool is_complete() const;

  /// Only meaningful when keeps_trace().
  TraceWord const& trace(Row i) const { return trace_[i]; }

  EngineCounters const& counters() const noexcept { return counters_; }

  /// Appends a row ω+1 with i^y = ω+1; i must be live and i^y undefined.
  Row define(Row i, Letter y);
  Row rep(Row i) const;
  void update(Row i);
  void merge(CoincidenceQueue& queue, Row m, Row n);
  void deduction(Row i, Letter y, Row j);
  ScanOutcome scan(Row i, Word const& w, Row j);
  void coincidence(Row m, Row n);
  std::optional<Row> apply_word(Row i, Word const& w) const;

  /// Direct entry manipulation for tests and table surgery.
  void set_entry(Row i, Letter y, Row j) { action_[slot(i, y)] = j; }
  void clear_entry(Row i, Letter y) { action_[slot(i, y)] = kUndefined; }
  void set_rho(Row i, Row r) { rho_[i] = r; }

  /// Raw action storage: (ω+1) × 2g, row 0 unused. Useful for bit-identity
  /// comparisons between runs.
  std::vector<Row> const& raw_action() const noexcept { return action_; }
  std::vector<Row> const& raw_rho() const noexcept { return rho_; }

  /// Renders one line per row with columns x_1..x_g, x̄_1..x̄_g, τ, ρ.
  std::string render(std::span<std::string const> names) const;

  /// Copy holding only the live rows, renumbered 1..|Ω| in order.
  EnumTable compacted() const;

 private:
  EnumTable() = default;
  std::size_t slot(Row i, Letter y) const { return i * 2 * g_ + y.column(g_); }
  Row new_row();

  std::size_t g_ = 0;
  std::vector<Seed> seeds_;
  bool keep_trace_ = true;
  bool coset_seed_ = false;
  std::vector<Row> action_;
  std::vector<Row> rho_;
  std::vector<TraceWord> trace_;
  mutable Row max_live_hint_ = 0;
  EngineCounters counters_;
};

/// One failed structural check on an enumeration table.
struct Violation {
  std::string property;
  std::string detail;
};

/// Checks Property 1 (row 1 live, τ of each seed row is its generator),
/// Property 2 (inverse pairs), Property 4 (every live row reachable from a
/// live seed row), ρ(i) ≤ i, and that no entry touches a dead row.
///
/// Keeps scratch buffers between calls so it can run after every engine
/// step of a long enumeration.
class PropertyValidator {
 public:
  std::vector<Violation> check(EnumTable const& t);

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Row> stack_;
};

/// Every violation found, empty when the table is sound.
std::vector<Violation> validate_properties(EnumTable const& t);

}  // namespace rackenum
