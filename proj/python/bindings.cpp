// Copyright 2026 The whyfail Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "whyfail/engine/engine.hpp"
#include "whyfail/engine/report.hpp"
#include "whyfail/lang/printer.hpp"
#include "whyfail/lang/typecheck.hpp"
#include "whyfail/learn/classifier.hpp"
#include "whyfail/testgen/generator.hpp"
#include "whyfail/testgen/test_file.hpp"

namespace py = pybind11;
using namespace whyfail;

namespace {

// Reports are built as ordered JSON in C++ and handed over as plain dicts.
py::object to_python(const engine::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

std::vector<interp::TestCase> tests_from(const lang::TypedProgram& p, const std::string& text) {
  return testgen::parse_tests(p, text);
}

py::object halfspace_tuple(const learn::HalfSpace& h) { return py::make_tuple(h.coeffs, h.rhs); }

}  // namespace

PYBIND11_MODULE(_whyfail, m) {
  m.doc() = "Explains assertion failures in MiniLang programs.";

  py::register_exception<lang::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<lang::TypeCheckError>(m, "TypeCheckError", PyExc_ValueError);
  py::register_exception<localize::NoFailingTest>(m, "NoFailingTest", PyExc_RuntimeError);
  py::register_exception<engine::NoPassingTest>(m, "NoPassingTest", PyExc_RuntimeError);

  py::class_<engine::Config>(m, "Config")
      .def(py::init<>())
      .def_readwrite("m", &engine::Config::m)
      .def_readwrite("x_threshold", &engine::Config::x_threshold)
      .def_readwrite("n", &engine::Config::n)
      .def_readwrite("k", &engine::Config::k)
      .def_readwrite("max_clauses", &engine::Config::max_clauses)
      .def_readwrite("max_points", &engine::Config::max_points)
      .def_readwrite("iteration_cap", &engine::Config::iteration_cap)
      .def_readwrite("synthesis_cap", &engine::Config::synthesis_cap)
      .def_readwrite("seed", &engine::Config::seed)
      .def_property(
          "solver_budget_ms", [](const engine::Config& c) { return c.solver_budget.count(); },
          [](engine::Config& c, long long ms) { c.solver_budget = std::chrono::milliseconds(ms); })
      .def("validate", &engine::Config::validate);

  py::class_<lang::TypedProgram>(m, "Program")
      .def(py::init([](const std::string& source) { return lang::load_program(source); }),
           py::arg("source"))
      .def_property_readonly("statement_count", &lang::TypedProgram::statement_count)
      .def_property_readonly("designated_assertion", &lang::TypedProgram::designated_assertion)
      .def("source", [](const lang::TypedProgram& p) { return lang::print_program(p.program()); },
           "Canonical pretty-printed source.");

  m.def(
      "normalize_tests",
      [](const lang::TypedProgram& p, const std::string& text) {
        return testgen::format_tests(tests_from(p, text));
      },
      py::arg("program"), py::arg("tests"), "Parses a test file and prints it back canonically.");

  m.def(
      "generate",
      [](const lang::TypedProgram& p, std::size_t count, std::uint64_t seed) {
        return testgen::format_tests(testgen::generate_tests(p, count, seed));
      },
      py::arg("program"), py::arg("m"), py::arg("seed") = 0, "Random tests in test-file syntax.");

  m.def(
      "run",
      [](const lang::TypedProgram& p, const std::string& tests) {
        auto t = tests_from(p, tests);
        auto suite = testgen::run_suite(p, t);
        return to_python(engine::suite_json(t, suite));
      },
      py::arg("program"), py::arg("tests"), "Verdict of every test.");

  m.def(
      "localize",
      [](const lang::TypedProgram& p, const std::string& tests, const engine::Config& config) {
        config.validate();
        auto t = engine::assemble_tests(p, tests_from(p, tests), config);
        std::optional<engine::Localization> loc;
        {
          py::gil_scoped_release release;
          loc = engine::localize_failure(p, t, config);
        }
        return to_python(engine::localize_json(p, *loc));
      },
      py::arg("program"), py::arg("tests"), py::arg("config") = engine::Config{},
      "Suspiciousness scores and candidate observation points.");

  m.def(
      "explain",
      [](const lang::TypedProgram& p, const std::string& tests, const engine::Config& config) {
        config.validate();
        auto given = tests_from(p, tests);
        engine::ExplainResult r;
        {
          py::gil_scoped_release release;
          r = engine::explain(p, given, config);
        }
        return to_python(engine::explain_json(p, r));
      },
      py::arg("program"), py::arg("tests"), py::arg("config") = engine::Config{},
      "Full explanation report.");

  m.def(
      "max_margin_separator",
      [](const std::vector<learn::Point>& pos, const std::vector<learn::Point>& neg) -> py::object {
        auto h = learn::max_margin_separator(pos, neg);
        if (!h) return py::none();
        return halfspace_tuple(*h);
      },
      py::arg("positives"), py::arg("negatives"),
      "(coeffs, rhs) of the maximum-margin separator, or None.");

  m.def(
      "conjunctive_classifier",
      [](const std::vector<learn::Point>& pos, const std::vector<learn::Point>& neg) -> py::object {
        auto c = learn::conjunctive_classifier(pos, neg);
        if (!c) return py::none();
        py::list clauses;
        for (const auto& h : c->clauses) clauses.append(halfspace_tuple(h));
        return std::move(clauses);
      },
      py::arg("positives"), py::arg("negatives"),
      "List of (coeffs, rhs) clauses whose conjunction separates the sets, or None.");

  m.def(
      "pretty",
      [](const std::vector<double>& coeffs, double rhs, const std::vector<std::string>& names) {
        return learn::pretty(learn::HalfSpace{coeffs, rhs}, names);
      },
      py::arg("coeffs"), py::arg("rhs"), py::arg("names"));
}
