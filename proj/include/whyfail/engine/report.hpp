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

#pragma once

#include <string>

#include <json.hpp>

#include "whyfail/engine/engine.hpp"

namespace whyfail::engine {

using Json = nlohmann::ordered_json;

Json point_json(const lang::TypedProgram& program, const interp::ObservationPoint& point);
Json classifier_json(const learn::Classifier& c, const std::vector<std::string>& names);
Json stats_json(const Stats& s);

/// Explanation report; deterministic for a given program, tests and config.
Json explain_json(const lang::TypedProgram& program, const ExplainResult& result);
std::string explain_text(const lang::TypedProgram& program, const ExplainResult& result);

/// Suspiciousness table and candidate points.
Json localize_json(const lang::TypedProgram& program, const Localization& loc);
std::string localize_text(const lang::TypedProgram& program, const Localization& loc);

/// Verdict of every test plus the partition counts.
Json suite_json(const std::vector<interp::TestCase>& tests, const testgen::SuiteResult& suite);
std::string suite_text(const std::vector<interp::TestCase>& tests,
                       const testgen::SuiteResult& suite);

}  // namespace whyfail::engine
