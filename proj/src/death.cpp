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

#include "ptegkit/death.hpp"

#include "block_graph.hpp"
#include "closure_kernel.hpp"
#include "ptegkit/wc.hpp"

namespace ptegkit {

HorizonCheck check_horizon(const PeriodicSystem& sys, std::uint64_t k) {
  const auto c = detail::Closure::compute(detail::block_graph(sys, k));
  HorizonCheck h;
  h.feasible = c.in_gamma();
  if (!h.feasible) {
    // The positive circuit only uses nodes up to the abort pivot.
    h.infeasible_from = c.abort_pivot() / sys.n();
    h.witness = c.witness();
  }
  return h;
}

namespace {

DeathReport search(const PeriodicSystem& sys, std::uint64_t bound) {
  DeathReport report;
  report.horizon_bound = bound;
  HorizonCheck top = check_horizon(sys, bound);
  report.probes = 1;
  if (top.feasible) return report;

  std::uint64_t lo = 0;
  std::uint64_t hi = top.infeasible_from;
  std::optional<PathWitness> witness = std::move(top.witness);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    HorizonCheck h = check_horizon(sys, mid);
    ++report.probes;
    if (h.feasible) {
      lo = mid + 1;
    } else {
      hi = h.infeasible_from;
      witness = std::move(h.witness);
    }
  }
  report.k_star = hi;
  report.witness = std::move(witness);
  return report;
}

}  // namespace

DeathReport first_death(const CharacteristicMatrices& mats) {
  const PeriodicSystem sys = build_periodic(mats);
  const WCVerdict v = verify_wc(sys);
  if (v.weakly_consistent)
    throw Error(ErrorCode::IsWeaklyConsistent, "net is weakly consistent; every horizon is feasible");
  DeathReport r = search(sys, v.certificate->search_bound());
  if (!r.k_star) throw std::logic_error("no death found below the certified horizon bound");
  return r;
}

DeathReport first_death(const CharacteristicMatrices& mats, std::uint64_t bound) {
  return search(build_periodic(mats), bound);
}

}  // namespace ptegkit
