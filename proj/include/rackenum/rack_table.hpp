#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rackenum/enum_table.hpp"

namespace rackenum {

/// (k, w) with k a live seed row and k^w the requested row.
struct RepresentativeWord {
  Row seed = kUndefined;
  Word word;
};

/// The row's trace when it still leads from its generator row to `j`;
/// otherwise breadth-first search from the live seed rows, rows in index order
/// and letters in column order. Throws std::logic_error if `j` is unreachable.
RepresentativeWord representative_word(EnumTable const& t, Row j);

/// Total operation table of a finite rack on positions 0..size-1.
struct RackTable {
  std::vector<Row> elements;        // surviving row ids, ascending
  std::vector<std::string> labels;  // τ(i), or the row number without a trace
  std::vector<std::size_t> op;      // op[i * size + j] = i ▷ j
  std::vector<std::size_t> inv_op;  // inv_op[i * size + j] = i ▷⁻¹ j

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t apply(std::size_t i, std::size_t j) const { return op[i * size() + j]; }
  std::size_t apply_inverse(std::size_t i, std::size_t j) const {
    return inv_op[i * size() + j];
  }
};

/// i ▷ j = i^{w̄ x_k w} and i ▷⁻¹ j = i^{w̄ x̄_k w} where (k, w) is the
/// representative word of j. Requires a complete table.
RackTable operation_table(EnumTable const& t, std::span<std::string const> names);

struct AxiomReport {
  std::size_t right_cancellation = 0;  // R1 failures over all pairs
  std::size_t self_distributive = 0;   // R2 failures over all triples
  std::size_t idempotence = 0;
  std::size_t n_fold = 0;
  std::vector<std::string> examples;  // first few violations, human readable

  bool is_rack() const noexcept { return right_cancellation == 0 && self_distributive == 0; }
  bool ok() const noexcept { return is_rack() && idempotence == 0 && n_fold == 0; }
};

/// Exhaustive R1 / R2 checks plus x ▷ x = x when `quandle` and the n-fold
/// identity x ▷ y ▷ ... ▷ y = x when `n` is set.
AxiomReport verify_rack_axioms(RackTable const& rt, bool quandle, std::optional<unsigned> n);

/// Blocks of live rows, each sorted, blocks ordered by their least row.
struct ComponentPartition {
  std::vector<std::vector<Row>> blocks;

  std::vector<std::size_t> sizes() const;
};

ComponentPartition components(EnumTable const& t);

struct CayleyGraph {
  struct Edge {
    Row from;
    Row to;
    Generator generator;
  };

  std::vector<Row> nodes;
  std::vector<std::string> labels;
  std::vector<Edge> edges;  // one per node and positive generator
};

CayleyGraph cayley_graph(EnumTable const& t, std::span<std::string const> names);

/// Live rows renumbered 1..|Ω| in order; ρ becomes the identity.
EnumTable compact(EnumTable const& t);

std::string to_dot(CayleyGraph const& graph, std::span<std::string const> names);

/// Header row of labels, then one row per element.
std::string op_table_csv(RackTable const& rt, bool inverse);

}  // namespace rackenum
