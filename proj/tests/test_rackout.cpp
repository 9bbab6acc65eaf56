#include <doctest.h>

#include <set>
#include <stdexcept>

#include "support.hpp"

using namespace rackenum;
using testing::w;

namespace {

EnumResult run(std::string const& fixture) {
  auto r = enumerate(testing::load_fixture(fixture));
  REQUIRE(r.completed());
  return r;
}

std::vector<std::string> const ab{"a", "b"};

std::size_t position(RackTable const& rt, Row r) {
  return static_cast<std::size_t>(std::find(rt.elements.begin(), rt.elements.end(), r) -
                                  rt.elements.begin());
}

}  // namespace

TEST_CASE("representative_word") {
  auto worked = run("worked_example.rack");
  auto one = representative_word(worked.table, 1);
  CHECK(one.seed == 1);
  CHECK(one.word.empty());
  auto three = representative_word(worked.table, 3);
  CHECK(three.seed == 1);
  CHECK(three.word == w("b"));

  EnumOptions plain;
  plain.keep_trace = false;
  auto untraced = enumerate(testing::worked_example(), plain);
  CHECK(representative_word(untraced.table, 3).word == w("a"));

  auto counter = run("ward_counterexample.rack");
  auto six = representative_word(counter.table, 6);
  CHECK(six.seed == 2);
  CHECK(six.word == w("a"));

  CHECK_THROWS_AS(representative_word(worked.table, 2), std::logic_error);
}

TEST_CASE("operation_table of the worked example") {
  auto r = run("worked_example.rack");
  auto rt = operation_table(r.table, ab);
  CHECK(rt.elements == std::vector<Row>{1, 3});
  CHECK(rt.labels == std::vector<std::string>{"a", "a^[b]"});
  // 1▷1=3, 1▷3=3, 3▷1=1, 3▷3=1, read off the final table through a and ~b a b.
  CHECK(rt.op == std::vector<std::size_t>{1, 1, 0, 0});
  auto report = verify_rack_axioms(rt, true, std::nullopt);
  CHECK(report.is_rack());
  CHECK(report.idempotence == 2);
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.examples.empty());
}

TEST_CASE("operation_table of the counterexample") {
  auto r = run("ward_counterexample.rack");
  auto rt = operation_table(r.table, ab);
  REQUIRE(rt.size() == 3);
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(rt.apply(0, x) == 0);
    CHECK(rt.apply(x, x) == x);
  }
  CHECK(rt.apply(1, 2) == 1);
  CHECK(rt.apply(2, 1) == 2);
  CHECK(rt.apply(1, 0) == 2);
  CHECK(rt.apply(2, 0) == 1);
  CHECK(verify_rack_axioms(rt, true, 2u).ok());
}

TEST_CASE("one-element quandle") {
  auto r = enumerate(Presentation{{"a"}, {}, true, std::nullopt});
  REQUIRE(r.completed());
  auto rt = operation_table(r.table, std::vector<std::string>{"a"});
  CHECK(rt.size() == 1);
  CHECK(rt.apply(0, 0) == 0);
  CHECK(components(r.table).sizes() == std::vector<std::size_t>{1});
  auto graph = cayley_graph(r.table, std::vector<std::string>{"a"});
  CHECK(graph.nodes.size() == 1);
  REQUIRE(graph.edges.size() == 1);
  CHECK(graph.edges[0].from == graph.edges[0].to);
}

TEST_CASE("verify_rack_axioms catches corruption") {
  auto r = run("link_2quandle.rack");
  auto rt = operation_table(r.table, std::vector<std::string>{"a", "b", "c"});
  REQUIRE(verify_rack_axioms(rt, true, 2u).ok());
  std::swap(rt.op[0], rt.op[1]);
  auto report = verify_rack_axioms(rt, true, 2u);
  CHECK_FALSE(report.is_rack());
}

TEST_CASE("operations do not depend on the representative") {
  for (auto name : {"worked_example.rack", "ward_counterexample.rack", "trefoil_4quandle.rack",
                    "torus_link_2quandle.rack"}) {
    CAPTURE(name);
    auto r = run(name);
    auto const& t = r.table;
    auto rt = operation_table(t, ab);
    auto g = t.generator_count();
    // Every word of length <= 4 from every generator row gives a representative.
    std::vector<std::pair<Generator, Word>> frontier;
    for (Generator x = 0; x < g; ++x) {
      frontier.push_back({x, Word{}});
    }
    std::size_t checked = 0;
    for (std::size_t depth = 0; depth <= 4; ++depth) {
      std::vector<std::pair<Generator, Word>> next;
      for (auto const& [x, word] : frontier) {
        auto j = t.apply_word(t.rep(x + 1), word);
        REQUIRE(j.has_value());
        auto jp = position(rt, *j);
        Word act = word.inverse();
        act.push_back(Letter{x, false});
        act = act * word;
        for (std::size_t ip = 0; ip < rt.size(); ++ip) {
          CHECK(position(rt, *t.apply_word(rt.elements[ip], act)) == rt.apply(ip, jp));
          ++checked;
        }
        for (std::size_t c = 0; c < 2 * g; ++c) {
          Word longer = word;
          longer.push_back(Letter::from_column(c, g));
          if (longer.size() == word.size() + 1) {
            next.push_back({x, longer});
          }
        }
      }
      frontier = std::move(next);
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("homomorphism counts match colourings into every small rack") {
  std::vector<testing::SmallRack> racks;
  for (std::size_t n = 1; n <= 3; ++n) {
    auto more = testing::all_racks(n);
    racks.insert(racks.end(), more.begin(), more.end());
  }
  REQUIRE(racks.size() > 10);
  for (auto name : {"worked_example.rack", "ward_counterexample.rack", "trefoil_4quandle.rack",
                    "torus_link_2quandle.rack", "three_generator.rack", "link_2quandle.rack"}) {
    CAPTURE(name);
    auto p = testing::load_fixture(name);
    auto r = enumerate(p);
    REQUIRE(r.completed());
    auto rt = operation_table(r.table, p.generator_names);
    for (auto const& q : racks) {
      CHECK(testing::count_homomorphisms(r.table, rt, q) == testing::count_colorings(p, q));
    }
  }
}

TEST_CASE("components") {
  auto link = run("link_2quandle.rack");
  auto sizes = components(link.table).sizes();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{4, 20});

  auto counter = run("ward_counterexample.rack");
  auto blocks = components(counter.table).blocks;
  CHECK(blocks == std::vector<std::vector<Row>>{{1}, {2, 6}});

  // Blocks are unions of orbits of the operation table.
  auto rt = operation_table(link.table, link.table.keeps_trace()
                                            ? std::vector<std::string>{"a", "b", "c"}
                                            : std::vector<std::string>{});
  auto partition = components(link.table);
  std::vector<std::size_t> block_of(link.table.omega() + 1);
  for (std::size_t k = 0; k < partition.blocks.size(); ++k) {
    for (Row r : partition.blocks[k]) {
      block_of[r] = k;
    }
  }
  for (std::size_t i = 0; i < rt.size(); ++i) {
    for (std::size_t j = 0; j < rt.size(); ++j) {
      CHECK(block_of[rt.elements[rt.apply(i, j)]] == block_of[rt.elements[i]]);
    }
  }
}

TEST_CASE("cayley_graph and DOT") {
  auto r = run("worked_example.rack");
  auto graph = cayley_graph(r.table, ab);
  CHECK(graph.nodes == std::vector<Row>{1, 3});
  CHECK(graph.edges.size() == 4);
  CHECK(to_dot(graph, ab) ==
        "digraph rack {\n"
        "  n1 [label=\"a\"];\n"
        "  n3 [label=\"a^[b]\"];\n"
        "  n1 -> n3 [label=\"a\"];\n"
        "  n1 -> n3 [label=\"b\"];\n"
        "  n3 -> n1 [label=\"a\"];\n"
        "  n3 -> n1 [label=\"b\"];\n"
        "}\n");

  auto link = run("link_2quandle.rack");
  std::vector<std::string> abc{"a", "b", "c"};
  auto big = cayley_graph(link.table, abc);
  CHECK(big.nodes.size() == 24);
  CHECK(big.edges.size() == 24 * 3);
  std::set<Generator> labels;
  for (auto const& e : big.edges) {
    labels.insert(e.generator);
  }
  CHECK(labels.size() == 3);

  EnumOptions plain;
  plain.keep_trace = false;
  auto untraced = enumerate(testing::worked_example(), plain);
  auto numbered = cayley_graph(untraced.table, ab);
  CHECK(numbered.labels == std::vector<std::string>{"1", "3"});
}

TEST_CASE("compact") {
  auto worked = run("worked_example.rack");
  auto c = compact(worked.table);
  CHECK(c.live_rows() == std::vector<Row>{1, 2});
  CHECK(c.omega() == 2);
  auto counter = run("ward_counterexample.rack");
  auto c2 = compact(counter.table);
  CHECK(c2.live_rows() == std::vector<Row>{1, 2, 3});
  CHECK(c2.at(2, Letter{0, false}) == 3);
  CHECK(to_string(c2.trace(3), ab) == "b^[a]");
  auto again = compact(c2);
  CHECK(again.raw_action() == c2.raw_action());
  auto rt = operation_table(c2, ab);
  CHECK(verify_rack_axioms(rt, true, 2u).ok());
}

TEST_CASE("op_table_csv") {
  auto r = run("worked_example.rack");
  auto rt = operation_table(compact(r.table), ab);
  CHECK(op_table_csv(rt, false) == ",a,a^[b]\na,a^[b],a^[b]\na^[b],a,a\n");
  CHECK(op_table_csv(rt, true) == ",a,a^[b]\na,a^[b],a^[b]\na^[b],a,a\n");
}

TEST_CASE("operation_table rejects coset tables") {
  auto p = testing::load_fixture("trefoil_4quandle.rack");
  auto cosets = enumerate_cosets(p, parse_subrack(p, "a; a^[b b]"));
  CHECK_THROWS_AS(operation_table(cosets.table, ab), std::logic_error);
}
