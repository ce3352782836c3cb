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
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ptegkit/rational.hpp"
#include "ptegkit/tropical.hpp"

namespace ptegkit::detail {

/// Finite arc from -> to of a precedence graph, i.e. entry A(to, from).
struct Arc {
  std::uint32_t to;
  std::uint32_t from;
  Rational weight;
};

/// Sparse precedence graph; parallel arcs keep the larger weight.
class ArcGraph {
 public:
  explicit ArcGraph(std::size_t nodes) : nodes_(nodes) {}
  static ArcGraph from_matrix(const TropicalMatrix& a);

  void add(std::size_t to, std::size_t from, const Rational& weight);
  [[nodiscard]] std::size_t nodes() const noexcept { return nodes_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  [[nodiscard]] std::optional<Rational> weight(std::size_t to, std::size_t from) const;
  /// Exact weight of a walk; throws if some step is not an arc.
  [[nodiscard]] Rational walk_weight(const std::vector<std::size_t>& nodes) const;

 private:
  static std::uint64_t key(std::size_t to, std::size_t from) { return (std::uint64_t{to} << 32U) | from; }
  std::size_t nodes_;
  std::vector<Arc> arcs_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Result of the Floyd-Warshall relaxation over an ArcGraph.
///
/// Pivots are processed in index order and the run stops at the first pivot
/// p whose diagonal entry is positive. At that point every positive circuit
/// found uses only nodes <= p, and no positive circuit lives on nodes < p, so
/// abort_pivot() is the smallest prefix size (minus one) that leaves Γ.
class Closure {
 public:
  enum class Kernel { Int64, Rational };

  static Closure compute(const ArcGraph& g, std::optional<Kernel> force = std::nullopt);

  [[nodiscard]] std::size_t nodes() const noexcept { return n_; }
  [[nodiscard]] bool in_gamma() const noexcept { return in_gamma_; }
  [[nodiscard]] std::size_t abort_pivot() const noexcept { return abort_; }
  [[nodiscard]] Kernel kernel() const noexcept { return kernel_; }
  /// Positive circuit (first node repeated at the end); only when !in_gamma().
  [[nodiscard]] const PathWitness& witness() const;

  /// Star entry (to, from); requires in_gamma().
  [[nodiscard]] TropicalScalar star(std::size_t to, std::size_t from) const;
  /// Optimal walk from -> to realizing star(to, from); empty if -inf.
  [[nodiscard]] std::vector<std::size_t> path(std::size_t from, std::size_t to) const;

  [[nodiscard]] TropicalMatrix star_matrix() const;
  [[nodiscard]] std::vector<std::int32_t> take_pred() && { return std::move(pred_); }

 private:
  void require_gamma() const;

  std::size_t n_ = 0;
  bool in_gamma_ = true;
  std::size_t abort_ = 0;
  Kernel kernel_ = Kernel::Int64;
  std::int64_t scale_ = 1;
  std::vector<std::int64_t> di_;
  std::vector<std::optional<Rational>> dr_;
  std::vector<std::int32_t> pred_;
  PathWitness witness_;
};

/// Walk from -> to read off a predecessor matrix (pred[to * n + from] is the
/// node preceding `to`; -1 when unreachable). Throws std::logic_error if the
/// chain does not terminate.
std::vector<std::size_t> reconstruct_path(const std::vector<std::int32_t>& pred, std::size_t n,
                                          std::size_t from, std::size_t to);

}  // namespace ptegkit::detail
