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

#include "ptegkit/trajectory.hpp"

#include <string>

#include "block_graph.hpp"
#include "closure_kernel.hpp"
#include "ptegkit/periodic.hpp"

namespace ptegkit {

TrajectoryWindow synthesize(const CharacteristicMatrices& mats, std::size_t k, std::span<const Rational> u) {
  const std::size_t n = mats.n();
  const std::size_t total = n * (k + 1);
  if (!u.empty() && u.size() != total)
    throw Error(ErrorCode::DimensionMismatch,
                "seed vector has " + std::to_string(u.size()) + " entries, expected " + std::to_string(total));
  const auto c = detail::Closure::compute(detail::block_graph(build_periodic(mats), k));
  if (!c.in_gamma())
    throw Error(ErrorCode::HorizonInfeasible,
                "horizon " + std::to_string(k) + " is infeasible; the first token death occurs at horizon " +
                    std::to_string(c.abort_pivot() / n) + " or earlier");

  TrajectoryWindow w;
  w.daters.assign(k + 1, std::vector<Rational>(n));
  for (std::size_t a = 0; a < total; ++a) {
    TropicalScalar best;
    for (std::size_t b = 0; b < total; ++b) {
      const TropicalScalar s = c.star(a, b);
      if (!s.is_finite()) continue;
      const Rational v = s.value() + (u.empty() ? Rational(0) : u[b]);
      if (!best.is_finite() || best.value() < v) best = TropicalScalar(v);
    }
    w.daters[a / n][a % n] = best.value();
  }
  return w;
}

}  // namespace ptegkit
