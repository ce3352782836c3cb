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

#include <algorithm>

#include "block_graph.hpp"
#include "closure_kernel.hpp"
#include "ptegkit/periodic.hpp"

namespace ptegkit {

namespace {

using detail::block_node;
using detail::Closure;

std::vector<PeriodicNode> to_periodic(const std::vector<std::size_t>& nodes, std::size_t n, std::int64_t shift) {
  std::vector<PeriodicNode> out;
  out.reserve(nodes.size());
  for (std::size_t v : nodes) out.push_back({v % n, static_cast<std::int64_t>(v / n) - shift});
  return out;
}

Rational finite(const TropicalScalar& s) { return s.value(); }

class WindowAnalysis final : public PumpAnalysis {
 public:
  WindowAnalysis(const PeriodicSystem& sys, detail::ArcGraph long_graph, Closure short_star, Closure long_star)
      : n_(sys.n()),
        long_graph_(std::move(long_graph)),
        short_(std::move(short_star)),
        long_(std::move(long_star)),
        width_(long_.nodes() / n_ - 1) {
    const std::int64_t n = static_cast<std::int64_t>(n_);
    s_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::int64_t t = -n; t <= n; ++t) {
        const TropicalScalar v = short_.star(block_node(n_, i, static_cast<std::size_t>(n + t)), block_node(n_, i, n_));
        if (v.is_finite()) s_[i].push_back({t, v.value()});
      }
    r_ = TropicalMatrix(n_, n_, Flavor::MaxPlus);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        const Anchor a = best(i, j);
        if (a.value) r_(i, j) = TropicalScalar(*a.value);
      }
  }

  const std::string& route() const override { return route_; }
  const std::vector<PumpSet>& pump_sets() const override { return s_; }
  const TropicalMatrix& connection() const override { return r_; }

  std::vector<PeriodicNode> pump_walk(std::size_t i, std::int64_t t) const override {
    const std::int64_t n = static_cast<std::int64_t>(n_);
    if (t < -n || t > n) throw Error(ErrorCode::InvalidArgument, "no pump pair with this shift");
    auto nodes = short_.path(block_node(n_, i, n_), block_node(n_, i, static_cast<std::size_t>(n + t)));
    if (nodes.empty()) throw Error(ErrorCode::InvalidArgument, "no pump pair with this shift");
    return to_periodic(nodes, n_, n);
  }

  std::vector<PeriodicNode> connection_circuit(std::size_t i, std::size_t j) const override {
    const Anchor a = best(i, j);
    if (!a.value) throw Error(ErrorCode::InvalidArgument, "rows are not connected by a circuit");
    const std::size_t home = block_node(n_, a.anchor_row, 0);
    std::vector<std::size_t> nodes;
    if (a.trivial) {
      nodes.push_back(home);
    } else if (a.closing) {
      nodes = long_.path(home, a.via);
      nodes.push_back(home);
    } else {
      const std::size_t visit = block_node(n_, a.other_row, a.col);
      nodes = long_.path(home, visit);
      auto back = long_.path(visit, home);
      nodes.insert(nodes.end(), back.begin() + 1, back.end());
    }
    return to_periodic(nodes, n_, 0);
  }

 private:
  struct Anchor {
    std::optional<Rational> value;
    std::size_t anchor_row = 0;  // row visited at column 0
    std::size_t other_row = 0;
    std::size_t col = 0;         // column of the other row's visit
    bool closing = false;        // circuit closed by the arc via -> home
    bool trivial = false;        // length-0 circuit at (anchor, 0)
    std::size_t via = 0;
  };

  /// Best closed walk through (anchor, 0) that visits row `other`, confined
  /// to the window's columns.
  Anchor anchored(std::size_t anchor, std::size_t other) const {
    Anchor out;
    out.anchor_row = anchor;
    out.other_row = other;
    const std::size_t home = block_node(n_, anchor, 0);
    if (anchor == other) {
      for (const detail::Arc& arc : long_graph_.arcs()) {
        if (arc.to != home) continue;
        const TropicalScalar head = long_.star(arc.from, home);
        if (!head.is_finite()) continue;
        Rational v = finite(head) + arc.weight;
        if (!out.value || *out.value < v || (*out.value == v && arc.from < out.via)) {
          out.value = std::move(v);
          out.closing = true;
          out.via = arc.from;
        }
      }
      return out;
    }
    for (std::size_t z = 0; z <= width_; ++z) {
      const std::size_t visit = block_node(n_, other, z);
      const TropicalScalar go = long_.star(visit, home);
      const TropicalScalar back = long_.star(home, visit);
      if (!go.is_finite() || !back.is_finite()) continue;
      Rational v = finite(go) + finite(back);
      if (!out.value || *out.value < v) {
        out.value = std::move(v);
        out.col = z;
      }
    }
    return out;
  }

  Anchor best(std::size_t i, std::size_t j) const {
    Anchor a = anchored(j, i);
    if (i == j) {
      if (!a.value || a.value->sign() < 0) {
        a.value = Rational(0);
        a.trivial = true;
      }
      return a;
    }
    Anchor b = anchored(i, j);
    if (b.value && (!a.value || *a.value < *b.value)) return b;
    return a;
  }

  std::string route_ = "window";
  std::size_t n_;
  detail::ArcGraph long_graph_;
  Closure short_;
  Closure long_;
  std::size_t width_;
  std::vector<PumpSet> s_;
  TropicalMatrix r_;
};

}  // namespace

std::unique_ptr<PumpAnalysis> window_analysis(const PeriodicSystem& sys) {
  const std::size_t n = sys.n();
  Closure short_star = Closure::compute(detail::block_graph(sys, 2 * n));
  if (!short_star.in_gamma()) return nullptr;
  const std::size_t width = std::max<std::size_t>(2 * ((n * n) / 2), 1);
  detail::ArcGraph long_graph = detail::block_graph(sys, width);
  Closure long_star = Closure::compute(long_graph);
  if (!long_star.in_gamma()) return nullptr;
  return std::make_unique<WindowAnalysis>(sys, std::move(long_graph), std::move(short_star), std::move(long_star));
}

}  // namespace ptegkit
