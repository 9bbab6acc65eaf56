#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rackenum/enumerate.hpp"
#include "rackenum/error.hpp"
#include "rackenum/presentation.hpp"
#include "rackenum/rack_table.hpp"

namespace py = pybind11;
using namespace rackenum;

namespace {

Word word_from(Presentation const& p, std::string const& text) { return parse_word(p, text); }

std::string word_to(Presentation const& p, Word const& w) {
  return to_string(w, p.generator_names);
}

Letter letter_from(Presentation const& p, std::string const& name) {
  auto w = parse_word(p, name);
  if (w.size() != 1) {
    throw Error("expected a single letter, got '" + name + "'");
  }
  return w[0];
}

// Tables keep the presentation alongside so letters and labels can use its names.
struct Enumeration {
  Presentation presentation;
  EnumResult result;
};

EnumOptions options(std::uint64_t run_limit, bool ward, bool minimal_secondary, bool keep_trace) {
  EnumOptions o;
  o.run_limit = run_limit;
  o.ward = ward;
  o.minimal_secondary = minimal_secondary;
  o.keep_trace = keep_trace;
  return o;
}

py::dict metrics_dict(Metrics const& m) {
  py::dict d;
  d["status"] = to_string(m.status);
  d["order"] = m.order;
  d["L"] = m.max_live;
  d["E"] = m.total_defined;
  d["scans"] = m.scans;
  d["deductions"] = m.deductions;
  d["coincidences"] = m.coincidences;
  d["wall_time_s"] = m.wall_time_s;
  return d;
}

}  // namespace

PYBIND11_MODULE(_rackenum, m) {
  m.doc() = "Enumeration of finitely presented racks and quandles";

  auto base = py::register_exception<Error>(m, "RackenumError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Presentation>(m, "Presentation")
      .def(py::init<>())
      .def_readwrite("generators", &Presentation::generator_names)
      .def_readwrite("quandle", &Presentation::quandle)
      .def_readwrite("nquandle", &Presentation::nquandle)
      .def_property_readonly("relations",
                             [](Presentation const& p) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (auto const& r : p.relations) {
                                 out.emplace_back(p.generator_names[r.base], word_to(p, r.exponent),
                                                  p.generator_names[r.target]);
                               }
                               return out;
                             })
      .def(
          "add_relation",
          [](Presentation& p, std::string const& base, std::string const& exponent,
             std::string const& target) {
            p.relations.push_back(
                {letter_from(p, base).generator, word_from(p, exponent), letter_from(p, target).generator});
          },
          py::arg("base"), py::arg("exponent"), py::arg("target"))
      .def("render", &render_presentation)
      .def("__eq__", [](Presentation const& a, Presentation const& b) { return a == b; })
      .def("__repr__", [](Presentation const& p) {
        return "<Presentation generators=" + std::to_string(p.generator_count()) +
               " relations=" + std::to_string(p.relations.size()) + ">";
      });

  m.def("parse_presentation", [](std::string const& text) { return parse_presentation(text); },
        py::arg("text"));
  m.def(
      "link_presentation",
      [](std::size_t arcs, std::vector<std::array<std::size_t, 3>> const& crossings, unsigned n) {
        return build_link_presentation({arcs, crossings}, n);
      },
      py::arg("arcs"), py::arg("crossings"), py::arg("n"));
  m.def(
      "minimal_cyclic_representative",
      [](Presentation const& p, std::string const& word) {
        return word_to(p, minimal_cyclic_representative(word_from(p, word), p.generator_count()));
      },
      py::arg("presentation"), py::arg("word"));
  m.def(
      "reduce_word", [](Presentation const& p, std::string const& word) {
        return word_to(p, word_from(p, word));
      },
      py::arg("presentation"), py::arg("word"));

  py::class_<Enumeration>(m, "Enumeration")
      .def_property_readonly("status",
                             [](Enumeration const& e) { return to_string(e.result.status); })
      .def_property_readonly("completed", [](Enumeration const& e) { return e.result.completed(); })
      .def_property_readonly("order", [](Enumeration const& e) { return e.result.metrics.order; })
      .def_property_readonly("metrics",
                             [](Enumeration const& e) { return metrics_dict(e.result.metrics); })
      .def_property_readonly("secondary",
                             [](Enumeration const& e) {
                               std::vector<std::string> out;
                               for (auto const& s : e.result.secondary) {
                                 out.push_back(word_to(e.presentation, s.word()));
                               }
                               return out;
                             })
      .def_property_readonly("live_rows",
                             [](Enumeration const& e) { return e.result.table.live_rows(); })
      .def_property_readonly("omega", [](Enumeration const& e) { return e.result.table.omega(); })
      .def(
          "at",
          [](Enumeration const& e, Row row, std::string const& letter) -> std::optional<Row> {
            auto const& t = e.result.table;
            if (row < 1 || row > t.omega()) {
              throw py::index_error("row out of range");
            }
            Row r = t.at(row, letter_from(e.presentation, letter));
            return r == kUndefined ? std::nullopt : std::optional<Row>(r);
          },
          py::arg("row"), py::arg("letter"))
      .def("rho", [](Enumeration const& e, Row row) { return e.result.table.rho(row); })
      .def("trace",
           [](Enumeration const& e, Row row) {
             return to_string(e.result.table.trace(row), e.presentation.generator_names);
           })
      .def("render", [](Enumeration const& e) {
        return e.result.table.render(e.presentation.generator_names);
      })
      .def("components",
           [](Enumeration const& e) { return components(e.result.table).blocks; })
      .def("cayley_dot",
           [](Enumeration const& e) {
             auto const& names = e.presentation.generator_names;
             return to_dot(cayley_graph(compact(e.result.table), names), names);
           })
      .def("operation_table",
           [](Enumeration const& e) {
             auto rt = operation_table(compact(e.result.table), e.presentation.generator_names);
             std::vector<std::vector<std::size_t>> op(rt.size());
             for (std::size_t i = 0; i < rt.size(); ++i) {
               for (std::size_t j = 0; j < rt.size(); ++j) {
                 op[i].push_back(rt.apply(i, j));
               }
             }
             return py::make_tuple(rt.labels, op);
           })
      .def("operation_csv",
           [](Enumeration const& e, bool inverse) {
             return op_table_csv(
                 operation_table(compact(e.result.table), e.presentation.generator_names), inverse);
           },
           py::arg("inverse") = false)
      .def(
          "verify_axioms",
          [](Enumeration const& e, bool quandle, std::optional<unsigned> n) {
            auto report = verify_rack_axioms(
                operation_table(e.result.table, e.presentation.generator_names), quandle, n);
            py::dict d;
            d["R1"] = report.right_cancellation;
            d["R2"] = report.self_distributive;
            d["idempotence"] = report.idempotence;
            d["n_fold"] = report.n_fold;
            d["ok"] = report.ok();
            d["examples"] = report.examples;
            return d;
          },
          py::arg("quandle") = false, py::arg("n") = std::nullopt);

  m.def(
      "enumerate",
      [](Presentation const& p, std::uint64_t run_limit, bool ward, bool minimal_secondary,
         bool keep_trace) {
        auto opts = options(run_limit, ward, minimal_secondary, keep_trace);
        py::gil_scoped_release release;
        return Enumeration{p, enumerate(p, opts)};
      },
      py::arg("presentation"), py::arg("run_limit") = 10000, py::arg("ward") = true,
      py::arg("minimal_secondary") = false, py::arg("keep_trace") = true);
  m.def(
      "enumerate_cosets",
      [](Presentation const& p, std::string const& sub, std::uint64_t run_limit, bool ward,
         bool minimal_secondary) {
        auto spec = parse_subrack(p, sub);
        auto opts = options(run_limit, ward, minimal_secondary, true);
        py::gil_scoped_release release;
        return Enumeration{p, enumerate_cosets(p, spec, opts)};
      },
      py::arg("presentation"), py::arg("subrack"), py::arg("run_limit") = 10000,
      py::arg("ward") = true, py::arg("minimal_secondary") = false);
}
