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

#pragma once

namespace ptegkit {

/// Worker threads used by the closure kernel. Resolved from, in order: the
/// last set_thread_count(n) with n > 0, the PTEG_THREADS environment
/// variable (0 or unset means auto), std::thread::hardware_concurrency().
unsigned thread_count();

/// Overrides the worker count; 0 restores automatic selection.
void set_thread_count(unsigned n);

}  // namespace ptegkit
