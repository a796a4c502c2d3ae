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

#include "whyfail/lang/ast.hpp"

#include <stdexcept>

namespace whyfail::lang {

int RecordDef::field_index(const std::string& field) const {
  for (std::size_t i = 0; i < fields.size(); ++i)
    if (fields[i].name == field) return static_cast<int>(i);
  return -1;
}

const FunctionDef& Program::entry() const {
  for (const auto& f : functions)
    if (f->is_entry) return *f;
  throw std::logic_error("no entry function");
}

const FunctionDef* Program::find_function(const std::string& name) const {
  for (const auto& f : functions)
    if (f->name == name) return f.get();
  return nullptr;
}

std::shared_ptr<const RecordDef> Program::find_record(const std::string& name) const {
  for (const auto& r : records)
    if (r->name == name) return r;
  return nullptr;
}

namespace {

void number_list(std::vector<StmtPtr>& list, std::vector<const Stmt*>& table) {
  for (auto& s : list) {
    s->loc.ordinal = table.size();
    table.push_back(s.get());
    if (s->init) s->init->loc = s->loc;
    if (s->update) s->update->loc = s->loc;
    number_list(s->body, table);
    number_list(s->else_body, table);
  }
}

}  // namespace

void Program::number_statements() {
  statements_.clear();
  for (auto& f : functions) number_list(f->body, statements_);
}

}  // namespace whyfail::lang
