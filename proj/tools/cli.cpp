#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "rackenum/error.hpp"
#include "rackenum/rack_table.hpp"

namespace rackenum::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunFlags {
  std::uint64_t limit = 10000;
  bool no_ward = false;
  bool minimal_secondary = false;
  bool no_trace = false;
  bool quandle = false;
  unsigned nquandle = 0;
  bool json_output = false;
  std::string input;
  std::string out;
};

void add_run_flags(CLI::App& cmd, RunFlags& flags) {
  cmd.add_option("input", flags.input, "Presentation file")->required();
  cmd.add_option("--limit", flags.limit, "Run limit M on the secondary-loop row index")
      ->envname("RACKENUM_LIMIT")
      ->check(CLI::PositiveNumber);
  cmd.add_flag("--no-ward", flags.no_ward, "Skip filling undefined entries after each row");
  cmd.add_flag("--minimal-secondary", flags.minimal_secondary,
               "Use minimal cyclic representatives of the secondary words");
  cmd.add_flag("--no-trace", flags.no_trace, "Do not maintain element words for each row");
  cmd.add_flag("--quandle", flags.quandle, "Add the quandle axioms");
  cmd.add_option("--nquandle", flags.nquandle, "Add the n-quandle axioms for this n")
      ->check(CLI::Range(2u, 1u << 20));
  cmd.add_flag("--json", flags.json_output, "Machine readable output");
}

EnumOptions options_from(RunFlags const& flags) {
  EnumOptions opts;
  opts.run_limit = flags.limit;
  opts.ward = !flags.no_ward;
  opts.minimal_secondary = flags.minimal_secondary;
  opts.keep_trace = !flags.no_trace;
  return opts;
}

std::string read_file(fs::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(fs::path const& path, std::string const& contents) {
  if (path.has_parent_path()) {
    fs::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  out << contents;
}

Presentation load(RunFlags const& flags) {
  auto p = parse_presentation(read_file(flags.input));
  p.quandle = p.quandle || flags.quandle;
  if (flags.nquandle != 0) {
    p.nquandle = flags.nquandle;
  }
  p.validate();
  return p;
}

int exit_code(EnumStatus s) {
  return s == EnumStatus::Completed ? kExitCompleted : kExitRunLimit;
}

std::string ratio(double value) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << value;
  return os.str();
}

std::string summary(Metrics const& m) {
  std::ostringstream os;
  os << "status: " << to_string(m.status) << '\n';
  if (m.status == EnumStatus::Completed) {
    os << "order: " << m.order << '\n';
  } else {
    os << "live rows: " << m.order << '\n';
  }
  os << "L (max live): " << m.max_live << '\n'
     << "E (rows defined): " << m.total_defined << '\n'
     << "scans: " << m.scans << ", deductions: " << m.deductions
     << ", coincidences: " << m.coincidences << '\n'
     << "time: " << m.wall_time_s << " s\n";
  if (m.status == EnumStatus::Completed) {
    os << "L/order: " << ratio(m.max_live_over_order())
       << ", E/order: " << ratio(m.total_defined_over_order()) << '\n';
  }
  return os.str();
}

int cmd_enumerate(RunFlags const& flags, bool show_table, std::ostream& out) {
  auto p = load(flags);
  auto result = enumerate(p, options_from(flags));
  auto table_text = result.table.render(p.generator_names);
  auto metrics = metrics_json(result.metrics);
  if (!flags.out.empty()) {
    auto stem = fs::path(flags.input).stem().string();
    write_file(fs::path(flags.out) / (stem + ".table.txt"), table_text);
    write_file(fs::path(flags.out) / (stem + ".metrics.json"), metrics + "\n");
  }
  if (flags.json_output) {
    out << metrics << '\n';
  } else {
    out << summary(result.metrics);
    if (show_table) {
      out << '\n' << table_text;
    }
  }
  return exit_code(result.status);
}

int cmd_optable(RunFlags const& flags, std::ostream& out, std::ostream& err) {
  auto p = load(flags);
  auto result = enumerate(p, options_from(flags));
  if (!result.completed()) {
    err << "enumeration did not complete: " << to_string(result.status) << '\n';
    return exit_code(result.status);
  }
  auto rt = operation_table(compact(result.table), p.generator_names);
  auto op = op_table_csv(rt, false);
  auto inv = op_table_csv(rt, true);
  if (!flags.out.empty()) {
    auto stem = fs::path(flags.input).stem().string();
    write_file(fs::path(flags.out) / (stem + ".op.csv"), op);
    write_file(fs::path(flags.out) / (stem + ".inv_op.csv"), inv);
  } else {
    out << "# op\n" << op << "# inv_op\n" << inv;
  }
  return kExitCompleted;
}

int cmd_cayley(RunFlags const& flags, std::ostream& out, std::ostream& err) {
  auto p = load(flags);
  auto result = enumerate(p, options_from(flags));
  if (!result.completed()) {
    err << "enumeration did not complete: " << to_string(result.status) << '\n';
    return exit_code(result.status);
  }
  auto dot = to_dot(cayley_graph(compact(result.table), p.generator_names), p.generator_names);
  if (!flags.out.empty()) {
    write_file(flags.out, dot);
  } else {
    out << dot;
  }
  return kExitCompleted;
}

int cmd_coset(RunFlags const& flags, std::string const& sub_text, std::ostream& out) {
  auto p = load(flags);
  auto sub = parse_subrack(p, sub_text);
  auto result = enumerate_cosets(p, sub, options_from(flags));
  auto table_text = result.table.render(p.generator_names);
  if (!flags.out.empty()) {
    auto stem = fs::path(flags.input).stem().string();
    write_file(fs::path(flags.out) / (stem + ".cosets.txt"), table_text);
  }
  if (flags.json_output) {
    auto j = json::parse(metrics_json(result.metrics));
    j["cosets"] = result.completed() ? json(result.metrics.order) : json(nullptr);
    j["cosets_may_overlap"] = result.cosets_may_overlap;
    out << j.dump() << '\n';
  } else {
    out << "status: " << to_string(result.status) << '\n';
    if (result.completed()) {
      out << "cosets: " << result.metrics.order << '\n';
    }
    out << "warning: rack cosets of a subrack need not partition the rack\n\n" << table_text;
  }
  return exit_code(result.status);
}

int cmd_bench(std::string const& manifest, RunFlags const& flags, std::ostream& out) {
  auto entries = parse_manifest(read_file(manifest), fs::path(manifest).parent_path());
  auto rows = run_bench(entries, options_from(flags));
  bool input_error = false;
  bool limit = false;
  for (auto const& r : rows) {
    input_error = input_error || !r.error.empty() || r.order_mismatch;
    limit = limit || (r.metrics && r.metrics->status != EnumStatus::Completed);
  }
  if (flags.json_output) {
    json j = json::array();
    for (auto const& r : rows) {
      json row = r.metrics ? json::parse(metrics_json(*r.metrics)) : json::object();
      row["file"] = r.entry.path.string();
      row["expected_order"] = r.entry.expected_order ? json(*r.entry.expected_order) : json();
      row["order_mismatch"] = r.order_mismatch;
      if (!r.error.empty()) {
        row["error"] = r.error;
      }
      j.push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
  } else {
    out << format_bench(rows);
  }
  if (input_error) {
    return kExitInputError;
  }
  return limit ? kExitRunLimit : kExitCompleted;
}

}  // namespace

std::string metrics_json(Metrics const& m) {
  bool done = m.status == EnumStatus::Completed;
  json j;
  j["status"] = to_string(m.status);
  j["order"] = done ? json(m.order) : json(nullptr);
  j["L"] = m.max_live;
  j["E"] = m.total_defined;
  j["scans"] = m.scans;
  j["deductions"] = m.deductions;
  j["coincidences"] = m.coincidences;
  j["wall_time_s"] = m.wall_time_s;
  j["L_over_order"] = done ? json(m.max_live_over_order()) : json(nullptr);
  j["E_over_order"] = done ? json(m.total_defined_over_order()) : json(nullptr);
  return j.dump();
}

std::vector<BenchEntry> parse_manifest(std::string_view text, fs::path const& base_dir) {
  std::vector<BenchEntry> entries;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string path;
    if (!(fields >> path)) {
      continue;
    }
    BenchEntry entry{fs::path(path).is_absolute() ? fs::path(path) : base_dir / path, {}};
    std::string order;
    if (fields >> order) {
      std::size_t used = 0;
      try {
        entry.expected_order = std::stoull(order, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != order.size()) {
        throw ParseError(line_no, line.find(order) + 1, "expected order must be an integer");
      }
    }
    std::string extra;
    if (fields >> extra) {
      throw ParseError(line_no, line.find(extra) + 1, "unexpected trailing text");
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::vector<BenchRow> run_bench(std::vector<BenchEntry> const& entries, EnumOptions const& opts) {
  std::vector<BenchRow> rows;
  for (auto const& entry : entries) {
    BenchRow row{entry, std::nullopt, {}, false};
    try {
      auto p = parse_presentation(read_file(entry.path));
      auto result = enumerate(p, opts);
      row.metrics = result.metrics;
      row.order_mismatch = entry.expected_order && result.completed() &&
                           *entry.expected_order != result.metrics.order;
    } catch (std::exception const& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_bench(std::vector<BenchRow> const& rows) {
  std::vector<std::vector<std::string>> cells{
      {"file", "status", "t", "order", "L", "E", "L/order", "E/order", "note"}};
  for (auto const& r : rows) {
    std::vector<std::string> line{r.entry.path.filename().string()};
    if (!r.metrics) {
      line.insert(line.end(), {"error", "", "", "", "", "", "", r.error});
    } else {
      auto const& m = *r.metrics;
      bool done = m.status == EnumStatus::Completed;
      std::ostringstream t;
      t << std::fixed << std::setprecision(3) << m.wall_time_s;
      line.push_back(to_string(m.status));
      line.push_back(t.str());
      line.push_back(done ? std::to_string(m.order) : "-");
      line.push_back(std::to_string(m.max_live));
      line.push_back(std::to_string(m.total_defined));
      line.push_back(done ? ratio(m.max_live_over_order()) : "-");
      line.push_back(done ? ratio(m.total_defined_over_order()) : "-");
      line.push_back(r.order_mismatch
                         ? "MISMATCH expected " + std::to_string(*r.entry.expected_order)
                         : "");
    }
    cells.push_back(std::move(line));
  }
  if (rows.empty()) {
    return {};
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
      // Numeric columns are right aligned.
      bool right = c >= 2 && c <= 7;
      auto pad = std::string(width[c] - line[c].size(), ' ');
      text += right ? pad + line[c] : line[c] + pad;
      text += "  ";
    }
    while (!text.empty() && text.back() == ' ') {
      text.pop_back();
    }
    out += text + '\n';
  }
  return out;
}

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate the elements of finitely presented racks", "rackenum"};
  app.require_subcommand(1);

  RunFlags flags;
  bool show_table = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate a presentation");
  add_run_flags(*enumerate_cmd, flags);
  enumerate_cmd->add_option("--out", flags.out, "Directory for <stem>.table.txt and metrics");
  enumerate_cmd->add_flag("--show-table", show_table, "Print the enumeration table");

  auto* optable_cmd = app.add_subcommand("optable", "Emit the operation tables as CSV");
  add_run_flags(*optable_cmd, flags);
  optable_cmd->add_option("--out", flags.out, "Directory for <stem>.op.csv and <stem>.inv_op.csv");

  auto* cayley_cmd = app.add_subcommand("cayley", "Emit the Cayley graph as DOT");
  add_run_flags(*cayley_cmd, flags);
  cayley_cmd->add_option("--out", flags.out, "Output .dot file");

  std::string sub;
  auto* coset_cmd = app.add_subcommand("coset", "Enumerate the cosets of a subrack");
  add_run_flags(*coset_cmd, flags);
  coset_cmd->add_option("--sub", sub, "Subrack generators, e.g. \"a;a^[b b]\"")->required();
  coset_cmd->add_option("--out", flags.out, "Directory for <stem>.cosets.txt");

  std::string manifest;
  auto* bench_cmd = app.add_subcommand("bench", "Run every presentation in a manifest");
  bench_cmd->add_option("manifest", manifest, "Manifest file")->required();
  bench_cmd->add_option("--limit", flags.limit, "Run limit M")
      ->envname("RACKENUM_LIMIT")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--json", flags.json_output, "Machine readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitCompleted : kExitInputError;
  }

  try {
    if (*enumerate_cmd) {
      return cmd_enumerate(flags, show_table, out);
    }
    if (*optable_cmd) {
      return cmd_optable(flags, out, err);
    }
    if (*cayley_cmd) {
      return cmd_cayley(flags, out, err);
    }
    if (*coset_cmd) {
      return cmd_coset(flags, sub, out);
    }
    if (*bench_cmd) {
      return cmd_bench(manifest, flags, out);
    }
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (fs::filesystem_error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace rackenum::cli
