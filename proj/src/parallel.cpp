// Copyright 2026 The ptegkit Authors
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

#include "ptegkit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace ptegkit {

namespace {
std::atomic<unsigned> g_override{0};

unsigned from_env() {
  const char* raw = std::getenv("PTEG_THREADS");
  if (raw == nullptr) return 0;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end) return 0;
  return value;
}
}  // namespace

unsigned thread_count() {
  if (unsigned n = g_override.load(std::memory_order_relaxed); n > 0) return n;
  if (unsigned n = from_env(); n > 0) return n;
  return std::max(1U, std::thread::hardware_concurrency());
}

void set_thread_count(unsigned n) { g_override.store(n, std::memory_order_relaxed); }

}  // namespace ptegkit
