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

#include "big_stack.hpp"

#include <sys/mman.h>
#include <ucontext.h>

#include <exception>

namespace whyfail::interp::detail {

namespace {

constexpr std::size_t kStackBytes = std::size_t{512} << 20;

// One lazily mapped stack per thread, reused across runs. Pages stay
// resident after the first deep run, so later switches cost no faults.
struct Stack {
  void* base = nullptr;
  bool active = false;

  ~Stack() {
    if (base) munmap(base, kStackBytes);
  }
};

thread_local Stack stack;

struct Job {
  const std::function<void()>* fn;
  std::exception_ptr error;
  ucontext_t caller;
};

thread_local Job* current = nullptr;

void entry() {
  Job* job = current;
  try {
    (*job->fn)();
  } catch (...) {
    job->error = std::current_exception();
  }
}

}  // namespace

void run_with_big_stack(const std::function<void()>& fn) {
  if (stack.active) {
    fn();
    return;
  }
  if (!stack.base) {
    void* p = mmap(nullptr, kStackBytes, PROT_READ | PROT_WRITE,
                   MAP_PRIVATE | MAP_ANONYMOUS | MAP_NORESERVE | MAP_STACK, -1, 0);
    if (p == MAP_FAILED) {
      fn();
      return;
    }
    stack.base = p;
  }

  Job job{&fn, nullptr, {}};
  ucontext_t callee;
  getcontext(&callee);
  callee.uc_stack.ss_sp = stack.base;
  callee.uc_stack.ss_size = kStackBytes;
  callee.uc_link = &job.caller;
  makecontext(&callee, entry, 0);

  current = &job;
  stack.active = true;
  swapcontext(&job.caller, &callee);
  stack.active = false;
  current = nullptr;
  if (job.error) std::rethrow_exception(job.error);
}

}  // namespace whyfail::interp::detail
