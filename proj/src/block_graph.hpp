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

#include <cstddef>

#include "closure_kernel.hpp"
#include "ptegkit/periodic.hpp"

namespace ptegkit::detail {

/// G(M_k) built directly from the periodic arcs, without the dense matrix.
ArcGraph block_graph(const PeriodicSystem& sys, std::size_t k);

inline std::size_t block_node(std::size_t n, std::size_t row, std::size_t col) { return col * n + row; }

}  // namespace ptegkit::detail
