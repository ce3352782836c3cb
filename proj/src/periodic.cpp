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
#include <array>
#include <stdexcept>

#include "block_graph.hpp"
#include "ptegkit/periodic.hpp"

namespace ptegkit {

PeriodicSystem build_periodic(const CharacteristicMatrices& mats) {
  const std::size_t n = mats.n();
  return PeriodicSystem{sharp(mats.b1), oplus(mats.a1, TropicalMatrix::identity(n)), oplus(mats.a0, sharp(mats.b0))};
}

BlockSystem build_block(const PeriodicSystem& sys, std::size_t k) {
  const std::size_t n = sys.n();
  BlockSystem b{k, TropicalMatrix(n * (k + 1), n * (k + 1), Flavor::MaxPlus)};
  for (std::size_t z = 0; z <= k; ++z)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        b.m(z * n + r, z * n + s) = sys.c(r, s);
        if (z < k) {
          b.m(z * n + r, (z + 1) * n + s) = sys.p(r, s);
          b.m((z + 1) * n + r, z * n + s) = sys.i(r, s);
        }
      }
  return b;
}

namespace detail {

ArcGraph block_graph(const PeriodicSystem& sys, std::size_t k) {
  const std::size_t n = sys.n();
  ArcGraph g(n * (k + 1));
  for (std::size_t z = 0; z <= k; ++z)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        if (sys.c(r, s).is_finite()) g.add(block_node(n, r, z), block_node(n, s, z), sys.c(r, s).value());
        if (z < k) {
          if (sys.p(r, s).is_finite()) g.add(block_node(n, r, z), block_node(n, s, z + 1), sys.p(r, s).value());
          if (sys.i(r, s).is_finite()) g.add(block_node(n, r, z + 1), block_node(n, s, z), sys.i(r, s).value());
        }
      }
  return g;
}

}  // namespace detail

std::optional<Rational> periodic_arc(const PeriodicSystem& sys, const PeriodicNode& a, const PeriodicNode& b) {
  if (a.row >= sys.n() || b.row >= sys.n()) throw Error(ErrorCode::DimensionMismatch, "row out of range");
  const TropicalMatrix* m = nullptr;
  switch (b.col - a.col) {
    case -1: m = &sys.p; break;
    case 0: m = &sys.c; break;
    case 1: m = &sys.i; break;
    default: return std::nullopt;
  }
  const TropicalScalar& w = (*m)(b.row, a.row);
  if (!w.is_finite()) return std::nullopt;
  return w.value();
}

Rational periodic_walk_weight(const PeriodicSystem& sys, const std::vector<PeriodicNode>& walk) {
  Rational total;
  for (std::size_t s = 1; s < walk.size(); ++s) {
    auto w = periodic_arc(sys, walk[s - 1], walk[s]);
    if (!w) throw Error(ErrorCode::InvalidArgument, "walk uses a missing periodic arc");
    total += *w;
  }
  return total;
}

namespace {

struct Step {
  std::size_t other;  // neighbouring row
  int dt;             // column change along the arc direction
  Rational w;
};

constexpr std::array<int, 3> kShift{0, -1, 1};  // C, P, I

/// Out-arcs (forward) or in-arcs (backward) of every row.
std::vector<std::vector<Step>> adjacency(const PeriodicSystem& sys, bool forward) {
  const std::size_t n = sys.n();
  const std::array<const TropicalMatrix*, 3> mats{&sys.c, &sys.p, &sys.i};
  std::vector<std::vector<Step>> adj(n);
  for (int kind = 0; kind < 3; ++kind)
    for (std::size_t to = 0; to < n; ++to)
      for (std::size_t from = 0; from < n; ++from) {
        const TropicalScalar& w = (*mats[kind])(to, from);
        if (!w.is_finite()) continue;
        if (forward)
          adj[from].push_back({to, kShift[kind], w.value()});
        else
          adj[to].push_back({from, kShift[kind], w.value()});
      }
  return adj;
}

/// Exact-length layers over states (row, shift) with shift in [-L, L].
/// Forward: best walk (src, 0) -> (row, shift). Backward: best walk
/// (row, shift) -> (src, 0). `link` stores the neighbouring state index.
class Layers {
 public:
  Layers(const std::vector<std::vector<Step>>& adj, std::size_t n, std::size_t src, std::size_t depth, bool forward)
      : n_(n), depth_(depth), width_(2 * depth + 1) {
    const std::size_t cells = n_ * width_;
    value_.assign((depth_ + 1) * cells, std::nullopt);
    link_.assign((depth_ + 1) * cells, -1);
    value_[index(0, src, 0)] = Rational(0);
    for (std::size_t l = 0; l < depth_; ++l) {
      const std::int64_t reach = static_cast<std::int64_t>(l);
      for (std::size_t r = 0; r < n_; ++r)
        for (std::int64_t t = -reach; t <= reach; ++t) {
          const auto& cur = value_[index(l, r, t)];
          if (!cur) continue;
          for (const Step& s : adj[r]) {
            const std::int64_t nt = forward ? t + s.dt : t - s.dt;
            auto& slot = value_[index(l + 1, s.other, nt)];
            Rational cand = *cur + s.w;
            if (!slot || *slot < cand) {
              slot = std::move(cand);
              link_[index(l + 1, s.other, nt)] = static_cast<std::int32_t>(r * width_ + static_cast<std::size_t>(t + static_cast<std::int64_t>(depth_)));
            }
          }
        }
    }
  }

  [[nodiscard]] std::size_t depth() const noexcept { return depth_; }
  [[nodiscard]] const std::optional<Rational>& at(std::size_t l, std::size_t row, std::int64_t t) const {
    return value_[index(l, row, t)];
  }
  [[nodiscard]] bool in_range(std::int64_t t) const noexcept {
    return t >= -static_cast<std::int64_t>(depth_) && t <= static_cast<std::int64_t>(depth_);
  }

  /// States visited by the optimal exact-length-l walk ending (forward) or
  /// starting (backward) at (row, t), listed from the layer-l state down to
  /// the source.
  [[nodiscard]] std::vector<PeriodicNode> trace(std::size_t l, std::size_t row, std::int64_t t) const {
    std::vector<PeriodicNode> out{{row, t}};
    for (std::size_t k = l; k > 0; --k) {
      const std::int32_t link = link_[index(k, row, t)];
      if (link < 0) throw std::logic_error("broken layer link");
      row = static_cast<std::size_t>(link) / width_;
      t = static_cast<std::int64_t>(static_cast<std::size_t>(link) % width_) - static_cast<std::int64_t>(depth_);
      out.push_back({row, t});
    }
    return out;
  }

 private:
  [[nodiscard]] std::size_t index(std::size_t l, std::size_t row, std::int64_t t) const {
    return (l * n_ + row) * width_ + static_cast<std::size_t>(t + static_cast<std::int64_t>(depth_));
  }

  std::size_t n_;
  std::size_t depth_;
  std::size_t width_;
  std::vector<std::optional<Rational>> value_;
  std::vector<std::int32_t> link_;
};

struct RBest {
  std::optional<Rational> value;
  std::size_t l1 = 0;
  std::size_t l2 = 0;
  std::int64_t t = 0;
};

class DefinitionalAnalysis final : public PumpAnalysis {
 public:
  explicit DefinitionalAnalysis(const PeriodicSystem& sys)
      : sys_(sys), fwd_(adjacency(sys, true)), bwd_(adjacency(sys, false)) {
    const std::size_t n = sys.n();
    s_.resize(n);
    s_len_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      short_.emplace_back(fwd_, n, i, n, true);
      const Layers& f = short_.back();
      for (std::int64_t t = -static_cast<std::int64_t>(n); t <= static_cast<std::int64_t>(n); ++t) {
        std::optional<Rational> best;
        std::size_t best_l = 0;
        for (std::size_t l = 0; l <= n; ++l) {
          const auto& v = f.at(l, i, t);
          if (v && (!best || *best < *v)) {
            best = v;
            best_l = l;
          }
        }
        if (best) {
          s_[i].push_back({t, *best});
          s_len_[i].push_back(best_l);
        }
      }
    }
    r_ = TropicalMatrix(n, n, Flavor::MaxPlus);
    for (std::size_t i = 0; i < n; ++i) {
      const auto best = best_circuits(i);
      for (std::size_t j = 0; j < n; ++j)
        if (best[j].value) r_(i, j) = TropicalScalar(*best[j].value);
    }
  }

  const std::string& route() const override { return route_; }
  const std::vector<PumpSet>& pump_sets() const override { return s_; }
  const TropicalMatrix& connection() const override { return r_; }

  std::vector<PeriodicNode> pump_walk(std::size_t i, std::int64_t t) const override {
    const PumpSet& s = s_.at(i);
    auto it = std::find_if(s.begin(), s.end(), [t](const PumpPair& p) { return p.t == t; });
    if (it == s.end()) throw Error(ErrorCode::InvalidArgument, "no pump pair with this shift");
    const std::size_t l = s_len_[i][static_cast<std::size_t>(it - s.begin())];
    auto walk = short_[i].trace(l, i, t);
    std::reverse(walk.begin(), walk.end());
    return walk;
  }

  std::vector<PeriodicNode> connection_circuit(std::size_t i, std::size_t j) const override {
    const RBest b = best_circuits(i).at(j);
    if (!b.value) throw Error(ErrorCode::InvalidArgument, "rows are not connected by a circuit");
    const std::size_t depth = sys_.n() * sys_.n();
    Layers f(fwd_, sys_.n(), i, depth, true);
    Layers g(bwd_, sys_.n(), i, depth, false);
    auto head = f.trace(b.l1, j, b.t);
    std::reverse(head.begin(), head.end());
    auto tail = g.trace(b.l2, j, b.t);
    head.insert(head.end(), tail.begin() + 1, tail.end());
    return head;
  }

 private:
  /// Best closed walk from (i, 0) of length in [0, n^2] through each row.
  std::vector<RBest> best_circuits(std::size_t i) const {
    const std::size_t n = sys_.n();
    const std::size_t depth = n * n;
    Layers f(fwd_, n, i, depth, true);
    Layers g(bwd_, n, i, depth, false);
    std::vector<RBest> best(n);
    best[i] = RBest{Rational(0), 0, 0, 0};
    auto offer = [&](std::size_t j, const Rational& v, std::size_t l1, std::size_t l2, std::int64_t t) {
      if (!best[j].value || *best[j].value < v) best[j] = RBest{v, l1, l2, t};
    };
    for (std::size_t j = 0; j < n; ++j)
      for (std::int64_t t = -static_cast<std::int64_t>(depth); t <= static_cast<std::int64_t>(depth); ++t) {
        // Prefix maxima of the backward layers at (j, t).
        std::vector<std::optional<Rational>> pre(depth + 1);
        std::vector<std::size_t> arg(depth + 1, 0);
        for (std::size_t l = 0; l <= depth; ++l) {
          pre[l] = l > 0 ? pre[l - 1] : std::nullopt;
          arg[l] = l > 0 ? arg[l - 1] : 0;
          const auto& v = g.at(l, j, t);
          const bool empty = l == 0 && j == i && t == 0;
          if (v && !empty && (!pre[l] || *pre[l] < *v)) {
            pre[l] = v;
            arg[l] = l;
          }
        }
        const bool home = j == i && t == 0;
        for (std::size_t l1 = 0; l1 <= depth; ++l1) {
          const auto& head = f.at(l1, j, t);
          if (!head) continue;
          const std::size_t budget = depth - l1;
          if (home && l1 > 0) {
            // Empty tail allowed: the head alone is a closed walk.
            offer(j, *head, l1, 0, t);
          }
          if (pre[budget]) offer(j, *head + *pre[budget], l1, arg[budget], t);
        }
      }
    return best;
  }

  std::string route_ = "definitional";
  PeriodicSystem sys_;
  std::vector<std::vector<Step>> fwd_;
  std::vector<std::vector<Step>> bwd_;
  std::vector<Layers> short_;
  std::vector<PumpSet> s_;
  std::vector<std::vector<std::size_t>> s_len_;
  TropicalMatrix r_;
};

}  // namespace

std::unique_ptr<PumpAnalysis> definitional_analysis(const PeriodicSystem& sys) {
  return std::make_unique<DefinitionalAnalysis>(sys);
}

std::vector<PumpSet> pump_sets(const PeriodicSystem& sys) { return DefinitionalAnalysis(sys).pump_sets(); }

TropicalMatrix connection_matrix(const PeriodicSystem& sys) { return DefinitionalAnalysis(sys).connection(); }

}  // namespace ptegkit
