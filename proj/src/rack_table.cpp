#include "rackenum/rack_table.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rackenum {

namespace {

std::string label_of(EnumTable const& t, Row i, std::span<std::string const> names) {
  return t.keeps_trace() ? to_string(t.trace(i), names) : std::to_string(i);
}

Generator seed_generator(EnumTable const& t, Row seed) {
  for (auto const& s : t.seeds()) {
    if (s.row == seed && s.generator) {
      return *s.generator;
    }
  }
  throw std::logic_error("operation_table needs an element table, not a coset table");
}

}  // namespace

RepresentativeWord representative_word(EnumTable const& t, Row j) {
  if (t.keeps_trace() && t.is_live(j) && t.trace(j).base) {
    auto const& trace = t.trace(j);
    for (auto const& s : t.seeds()) {
      if (s.generator == trace.base) {
        Row k = t.rep(s.row);
        if (t.apply_word(k, trace.exponent) == j) {
          return {k, trace.exponent};
        }
        break;
      }
    }
  }
  auto const g = t.generator_count();
  std::vector<Row> parent(t.omega() + 1, kUndefined);
  std::vector<std::size_t> via(t.omega() + 1, 0);
  std::vector<char> seen(t.omega() + 1, 0);
  std::deque<Row> queue;
  for (auto const& s : t.seeds()) {
    if (t.is_live(s.row)) {
      seen[s.row] = 1;
      queue.push_back(s.row);
    }
  }
  while (!queue.empty()) {
    Row i = queue.front();
    queue.pop_front();
    if (i == j) {
      break;
    }
    for (std::size_t c = 0; c < 2 * g; ++c) {
      Row next = t.at(i, Letter::from_column(c, g));
      if (next != kUndefined && !seen[next]) {
        seen[next] = 1;
        parent[next] = i;
        via[next] = c;
        queue.push_back(next);
      }
    }
  }
  if (j < 1 || j > t.omega() || !seen[j]) {
    throw std::logic_error("row " + std::to_string(j) + " is not reachable from a seed row");
  }
  std::vector<Letter> letters;
  Row i = j;
  while (parent[i] != kUndefined) {
    letters.push_back(Letter::from_column(via[i], g));
    i = parent[i];
  }
  std::reverse(letters.begin(), letters.end());
  return {i, Word(letters)};
}

RackTable operation_table(EnumTable const& t, std::span<std::string const> names) {
  RackTable rt;
  rt.elements = t.live_rows();
  auto const n = rt.elements.size();
  std::vector<std::size_t> position(t.omega() + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    position[rt.elements[p]] = p;
    rt.labels.push_back(label_of(t, rt.elements[p], names));
  }
  rt.op.resize(n * n);
  rt.inv_op.resize(n * n);
  for (std::size_t jp = 0; jp < n; ++jp) {
    auto [seed, w] = representative_word(t, rt.elements[jp]);
    auto generator = seed_generator(t, seed);
    auto conjugate = [&w = w, generator](bool inverted) {
      Word c = w.inverse();
      c.push_back(Letter{generator, inverted});
      return c * w;
    };
    Word act = conjugate(false);
    Word act_inverse = conjugate(true);
    for (std::size_t ip = 0; ip < n; ++ip) {
      auto r = t.apply_word(rt.elements[ip], act);
      auto s = t.apply_word(rt.elements[ip], act_inverse);
      if (!r || !s || !t.is_live(*r) || !t.is_live(*s)) {
        throw std::logic_error("operation_table: table is not complete");
      }
      rt.op[ip * n + jp] = position[*r];
      rt.inv_op[ip * n + jp] = position[*s];
    }
  }
  return rt;
}

AxiomReport verify_rack_axioms(RackTable const& rt, bool quandle, std::optional<unsigned> n) {
  AxiomReport report;
  auto const size = rt.size();
  auto note = [&](std::string text) {
    if (report.examples.size() < 8) {
      report.examples.push_back(std::move(text));
    }
  };
  auto label = [&](std::size_t i) { return rt.labels.empty() ? std::to_string(i) : rt.labels[i]; };
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      if (rt.apply_inverse(rt.apply(x, y), y) != x || rt.apply(rt.apply_inverse(x, y), y) != x) {
        ++report.right_cancellation;
        note("R1 fails at (" + label(x) + ", " + label(y) + ")");
      }
    }
  }
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      auto xy = rt.apply(x, y);
      for (std::size_t z = 0; z < size; ++z) {
        if (rt.apply(xy, z) != rt.apply(rt.apply(x, z), rt.apply(y, z))) {
          ++report.self_distributive;
          note("R2 fails at (" + label(x) + ", " + label(y) + ", " + label(z) + ")");
        }
      }
    }
  }
  if (quandle || n) {
    for (std::size_t x = 0; x < size; ++x) {
      if (rt.apply(x, x) != x) {
        ++report.idempotence;
        note("idempotence fails at " + label(x));
      }
    }
  }
  if (n) {
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        auto z = x;
        for (unsigned k = 0; k < *n; ++k) {
          z = rt.apply(z, y);
        }
        if (z != x) {
          ++report.n_fold;
          note(std::to_string(*n) + "-fold identity fails at (" + label(x) + ", " + label(y) +
               ")");
        }
      }
    }
  }
  return report;
}

std::vector<std::size_t> ComponentPartition::sizes() const {
  std::vector<std::size_t> out;
  for (auto const& b : blocks) {
    out.push_back(b.size());
  }
  return out;
}

ComponentPartition components(EnumTable const& t) {
  auto const g = t.generator_count();
  ComponentPartition partition;
  std::vector<char> seen(t.omega() + 1, 0);
  for (Row start : t.live_rows()) {
    if (seen[start]) {
      continue;
    }
    std::vector<Row> block;
    std::vector<Row> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      Row i = stack.back();
      stack.pop_back();
      block.push_back(i);
      for (std::size_t c = 0; c < 2 * g; ++c) {
        Row j = t.at(i, Letter::from_column(c, g));
        if (j != kUndefined && !seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    std::sort(block.begin(), block.end());
    partition.blocks.push_back(std::move(block));
  }
  return partition;
}

CayleyGraph cayley_graph(EnumTable const& t, std::span<std::string const> names) {
  CayleyGraph graph;
  graph.nodes = t.live_rows();
  for (Row i : graph.nodes) {
    graph.labels.push_back(label_of(t, i, names));
    for (Generator x = 0; x < t.generator_count(); ++x) {
      Row j = t.at(i, Letter{x, false});
      if (j != kUndefined) {
        graph.edges.push_back({i, j, x});
      }
    }
  }
  return graph;
}

EnumTable compact(EnumTable const& t) { return t.compacted(); }

std::string to_dot(CayleyGraph const& graph, std::span<std::string const> names) {
  std::string out = "digraph rack {\n";
  for (std::size_t p = 0; p < graph.nodes.size(); ++p) {
    out += "  n" + std::to_string(graph.nodes[p]) + " [label=\"" + graph.labels[p] + "\"];\n";
  }
  for (auto const& e : graph.edges) {
    auto name = e.generator < names.size() ? names[e.generator]
                                           : "x" + std::to_string(e.generator + 1);
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) + " [label=\"" +
           name + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string op_table_csv(RackTable const& rt, bool inverse) {
  std::string out;
  for (std::size_t j = 0; j < rt.size(); ++j) {
    out += ',';
    out += rt.labels[j];
  }
  out += '\n';
  for (std::size_t i = 0; i < rt.size(); ++i) {
    out += rt.labels[i];
    for (std::size_t j = 0; j < rt.size(); ++j) {
      out += ',';
      out += rt.labels[inverse ? rt.apply_inverse(i, j) : rt.apply(i, j)];
    }
    out += '\n';
  }
  return out;
}

}  // namespace rackenum
