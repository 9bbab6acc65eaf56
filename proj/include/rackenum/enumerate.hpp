#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rackenum/enum_table.hpp"
#include "rackenum/presentation.hpp"

namespace rackenum {

struct EnumOptions {
  /// Bound on the secondary-loop row index.
  std::uint64_t run_limit = 10000;
  /// Fill every undefined entry of a live row after its secondary scans.
  bool ward = true;
  /// Replace each secondary word by its minimal cyclic representative.
  bool minimal_secondary = false;
  bool keep_trace = true;
  /// Called with the table after every scan and every Ward definition.
  std::function<void(EnumTable const&)> observer;
};

enum class EnumStatus {
  Completed,
  RunLimitExceeded,
  // The loop ran past the last live row but the table still has undefined
  // entries. Only reachable with ward disabled.
  Incomplete,
};

std::string to_string(EnumStatus s);

struct Metrics {
  EnumStatus status = EnumStatus::RunLimitExceeded;
  std::size_t order = 0;  // live rows at the end of the run
  std::size_t max_live = 0;
  std::size_t total_defined = 0;
  std::uint64_t scans = 0;
  std::uint64_t deductions = 0;
  std::uint64_t coincidences = 0;
  double wall_time_s = 0.0;

  double max_live_over_order() const;
  double total_defined_over_order() const;
};

struct EnumResult {
  EnumStatus status = EnumStatus::RunLimitExceeded;
  EnumTable table;
  std::vector<SecondaryWord> secondary;
  Metrics metrics;
  /// Set for coset runs: cosets of a subrack need not partition the rack.
  bool cosets_may_overlap = false;

  bool completed() const noexcept { return status == EnumStatus::Completed; }
};

/// An element x_base^exponent of the presented rack.
struct SubrackGenerator {
  Generator base = 0;
  Word exponent;
};

struct SubrackSpec {
  std::vector<SubrackGenerator> generators;
};

/// Derives R_2 from the axiom-injected relations and builds the seed table.
/// Throws rackenum::Error on a relation with an empty exponent.
std::pair<std::vector<SecondaryWord>, EnumTable> init(Presentation const& p,
                                                      bool minimal_secondary,
                                                      bool keep_trace = true);

/// Appends `w` to `words` unless already present.
void add_secondary(std::vector<SecondaryWord>& words, Word const& w, bool minimal,
                   std::size_t generator_count);

EnumResult enumerate(Presentation const& p, EnumOptions const& opts = {});

/// Enumerates the rack cosets Σ^w of the subrack generated by `sub`. Row 1
/// is Σ itself.
EnumResult enumerate_cosets(Presentation const& p, SubrackSpec const& sub,
                            EnumOptions const& opts = {});

Metrics collect_metrics(EnumTable const& t, EnumStatus status, double wall_time_s);

/// Parses "a; a^[b b]; c^[~a]" against `p`.
SubrackSpec parse_subrack(Presentation const& p, std::string_view text);

}  // namespace rackenum
