#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rackenum/enumerate.hpp"

namespace rackenum::cli {

inline constexpr int kExitCompleted = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitRunLimit = 2;

/// Runs the command line front end; `args` excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

/// Flat metrics object: status, order, L, E, scans, deductions, coincidences,
/// wall_time_s, L_over_order, E_over_order. Order and the ratios are null
/// unless the run completed.
std::string metrics_json(Metrics const& m);

struct BenchEntry {
  std::filesystem::path path;
  std::optional<std::size_t> expected_order;
};

/// `<path> [expected order]` per line, `#` comments; relative paths resolve
/// against the manifest's directory.
std::vector<BenchEntry> parse_manifest(std::string_view text,
                                       std::filesystem::path const& base_dir);

struct BenchRow {
  BenchEntry entry;
  std::optional<Metrics> metrics;
  std::string error;
  bool order_mismatch = false;
};

std::vector<BenchRow> run_bench(std::vector<BenchEntry> const& entries,
                                EnumOptions const& opts);

/// Aligned columns: file, status, t, order, L, E, L/order, E/order.
std::string format_bench(std::vector<BenchRow> const& rows);

}  // namespace rackenum::cli
