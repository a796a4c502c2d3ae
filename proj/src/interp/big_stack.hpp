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

#include <functional>

namespace whyfail::interp::detail {

/// Runs `fn` to completion on a separate large stack so deeply
/// recursive MiniLang programs do not exhaust the native stack. Exceptions
/// thrown by `fn` are rethrown in the caller.
void run_with_big_stack(const std::function<void()>& fn);

}  // namespace whyfail::interp::detail
