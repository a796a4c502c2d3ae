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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "whyfail/engine/engine.hpp"
#include "whyfail/engine/report.hpp"
#include "whyfail/lang/typecheck.hpp"
#include "whyfail/testgen/generator.hpp"
#include "whyfail/testgen/test_file.hpp"

namespace {

using namespace whyfail;

constexpr int kExplained = 0;
constexpr int kError = 1;
constexpr int kNoExplanation = 2;

struct Options {
  std::string program;
  std::string tests;
  std::string out;
  std::string format = "text";
  engine::Config config;
  std::size_t dump_trace = 0;
  bool has_dump_trace = false;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

lang::TypedProgram load(const Options& o) { return lang::load_program(read_text(o.program)); }

std::vector<interp::TestCase> given_tests(const lang::TypedProgram& p, const Options& o) {
  if (o.tests.empty()) return {};
  return testgen::parse_tests(p, read_text(o.tests));
}

// Prints `text` or `json` on stdout per --format; --out always gets JSON.
void emit(const Options& o, const engine::Json& json, const std::string& text) {
  if (!o.out.empty()) write_text(o.out, json.dump(2) + "\n");
  if (o.format == "json")
    std::cout << json.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_explain(const Options& o) {
  auto program = load(o);
  auto tests = given_tests(program, o);
  auto result = engine::explain(program, tests, o.config);
  emit(o, engine::explain_json(program, result), engine::explain_text(program, result));
  return result.explanation ? kExplained : kNoExplanation;
}

int cmd_localize(const Options& o) {
  auto program = load(o);
  auto tests = engine::assemble_tests(program, given_tests(program, o), o.config);
  auto loc = engine::localize_failure(program, tests, o.config);
  emit(o, engine::localize_json(program, loc), engine::localize_text(program, loc));
  return 0;
}

int cmd_run(const Options& o) {
  auto program = load(o);
  auto tests = engine::assemble_tests(program, given_tests(program, o), o.config);
  auto suite = testgen::run_suite(program, tests);
  emit(o, engine::suite_json(tests, suite), engine::suite_text(tests, suite));
  if (o.has_dump_trace) {
    if (o.dump_trace < 1 || o.dump_trace > tests.size())
      throw std::runtime_error("--dump-trace: no test " + std::to_string(o.dump_trace));
    std::cerr << interp::dump_trace(suite.results[o.dump_trace - 1].trace);
  }
  return 0;
}

int cmd_gen(const Options& o) {
  auto program = load(o);
  auto tests =
      testgen::generate_tests(program, o.config.m, o.config.seed, o.config.generation);
  const std::string text = testgen::format_tests(tests);
  if (o.out.empty())
    std::cout << text;
  else
    write_text(o.out, text);
  return 0;
}

void add_common(CLI::App* cmd, Options& o, bool tests) {
  cmd->add_option("--program", o.program, "Program source file")
      ->required()
      ->envname("WHYFAIL_PROGRAM");
  if (tests) cmd->add_option("--tests", o.tests, "Test file")->envname("WHYFAIL_TESTS");
  cmd->add_option("--m", o.config.m, "Random tests to generate")->envname("WHYFAIL_M");
  cmd->add_option("--seed", o.config.seed, "Random seed")->envname("WHYFAIL_SEED");
  cmd->add_option("--out", o.out, "Output file")->envname("WHYFAIL_OUT");
}

void add_search(CLI::App* cmd, Options& o) {
  cmd->add_option("--x-threshold", o.config.x_threshold, "Minimum suspiciousness")
      ->envname("WHYFAIL_X_THRESHOLD");
  cmd->add_option("--n", o.config.n, "Feature vector width")->envname("WHYFAIL_N");
  cmd->add_option("--k", o.config.k, "Largest feature combination")->envname("WHYFAIL_K");
  cmd->add_option("--max-clauses", o.config.max_clauses, "Clauses per classifier")
      ->envname("WHYFAIL_MAX_CLAUSES");
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format on stdout")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("WHYFAIL_FORMAT");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explain assertion failures with learned state predicates"};
  app.require_subcommand(1);
  Options o;

  auto* explain = app.add_subcommand("explain", "Learn an explanation of the failing assertion");
  add_common(explain, o, true);
  add_search(explain, o);
  add_format(explain, o);

  auto* localize = app.add_subcommand("localize", "Suspiciousness scores and observation points");
  add_common(localize, o, true);
  localize->add_option("--x-threshold", o.config.x_threshold, "Minimum suspiciousness")
      ->envname("WHYFAIL_X_THRESHOLD");
  add_format(localize, o);

  auto* run = app.add_subcommand("run", "Run the tests and classify verdicts");
  add_common(run, o, true);
  add_format(run, o);
  run->add_option("--dump-trace", o.dump_trace, "Print the trace of test N on stderr");

  auto* gen = app.add_subcommand("gen", "Generate random tests");
  add_common(gen, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }
  o.has_dump_trace = run->count("--dump-trace") > 0;

  try {
    o.config.validate();
    if (*explain) return cmd_explain(o);
    if (*localize) return cmd_localize(o);
    if (*run) return cmd_run(o);
    if (*gen) return cmd_gen(o);
  } catch (const lang::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
