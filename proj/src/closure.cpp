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
#include <barrier>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "closure_kernel.hpp"
#include "ptegkit/parallel.hpp"
#include "ptegkit/tropical.hpp"

namespace ptegkit {
namespace detail {

ArcGraph ArcGraph::from_matrix(const TropicalMatrix& a) {
  if (a.flavor() != Flavor::MaxPlus) throw Error(ErrorCode::FlavorMismatch, "precedence graph needs a max-plus matrix");
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "precedence graph needs a square matrix");
  if (a.rows() > std::numeric_limits<std::int32_t>::max())
    throw Error(ErrorCode::InvalidArgument, "matrix too large");
  ArcGraph g(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const TropicalScalar& w = a(i, j);
      if (w.is_pos_inf()) throw Error(ErrorCode::InvalidArgument, "+inf entry in a max-plus precedence matrix");
      if (w.is_finite()) g.add(i, j, w.value());
    }
  return g;
}

void ArcGraph::add(std::size_t to, std::size_t from, const Rational& weight) {
  if (to >= nodes_ || from >= nodes_) throw Error(ErrorCode::DimensionMismatch, "arc endpoint out of range");
  auto [it, inserted] = index_.try_emplace(key(to, from), arcs_.size());
  if (inserted) {
    arcs_.push_back({static_cast<std::uint32_t>(to), static_cast<std::uint32_t>(from), weight});
  } else if (arcs_[it->second].weight < weight) {
    arcs_[it->second].weight = weight;
  }
}

std::optional<Rational> ArcGraph::weight(std::size_t to, std::size_t from) const {
  auto it = index_.find(key(to, from));
  if (it == index_.end()) return std::nullopt;
  return arcs_[it->second].weight;
}

Rational ArcGraph::walk_weight(const std::vector<std::size_t>& nodes) const {
  Rational total;
  for (std::size_t s = 1; s < nodes.size(); ++s) {
    auto w = weight(nodes[s], nodes[s - 1]);
    if (!w) throw Error(ErrorCode::InvalidArgument, "walk uses a missing arc");
    total += *w;
  }
  return total;
}

std::vector<std::size_t> reconstruct_path(const std::vector<std::int32_t>& pred, std::size_t n, std::size_t from,
                                          std::size_t to) {
  if (from == to) return {from};
  std::vector<std::size_t> rev{to};
  std::size_t cur = to;
  while (cur != from) {
    const std::int32_t prev = pred[cur * n + from];
    if (prev < 0) return {};
    cur = static_cast<std::size_t>(prev);
    rev.push_back(cur);
    if (rev.size() > n + 1) throw std::logic_error("predecessor chain does not terminate");
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

namespace {

struct IntCells {
  using T = std::int64_t;
  static constexpr T kNeg = std::numeric_limits<T>::min();
  static bool finite(const T& x) { return x != kNeg; }
  static bool positive(const T& x) { return x != kNeg && x > 0; }
  static T add(const T& a, const T& b) { return a + b; }
  static bool improves(const T& cand, const T& cur) { return cand > cur; }
};

struct RatCells {
  using T = std::optional<Rational>;
  static bool finite(const T& x) { return x.has_value(); }
  static bool positive(const T& x) { return x && x->sign() > 0; }
  static T add(const T& a, const T& b) { return *a + *b; }
  static bool improves(const T& cand, const T& cur) { return !cur || *cur < *cand; }
};

/// Relaxes d in place. Returns the abort pivot, or n when the graph is in Γ.
template <class Cells>
std::size_t floyd_warshall(std::size_t n, std::vector<typename Cells::T>& d, std::vector<std::int32_t>& pred) {
  std::vector<std::uint32_t> cols;
  cols.reserve(n);
  auto prepare = [&](std::size_t p) {
    cols.clear();
    const auto* prow = &d[p * n];
    for (std::size_t j = 0; j < n; ++j)
      if (j != p && Cells::finite(prow[j])) cols.push_back(static_cast<std::uint32_t>(j));
  };
  auto relax_rows = [&](std::size_t p, std::size_t lo, std::size_t hi) {
    const auto* prow = &d[p * n];
    for (std::size_t i = lo; i < hi; ++i) {
      if (i == p) continue;
      auto* row = &d[i * n];
      if (!Cells::finite(row[p])) continue;
      const auto dip = row[p];
      const std::int32_t via = pred[i * n + p];
      std::int32_t* prd = &pred[i * n];
      for (std::uint32_t j : cols) {
        auto cand = Cells::add(dip, prow[j]);
        if (Cells::improves(cand, row[j])) {
          row[j] = std::move(cand);
          prd[j] = via;
        }
      }
    }
  };

  const unsigned workers = n < 256 ? 1U : std::min<unsigned>(thread_count(), static_cast<unsigned>(n / 64));
  if (workers <= 1) {
    for (std::size_t p = 0; p < n; ++p) {
      if (Cells::positive(d[p * n + p])) return p;
      prepare(p);
      relax_rows(p, 0, n);
    }
    return n;
  }

  std::size_t next = 0;
  std::size_t current = 0;
  std::size_t abort = n;
  bool stop = false;
  auto on_phase = [&]() noexcept {
    if (next == n) {
      stop = true;
      return;
    }
    current = next++;
    if (Cells::positive(d[current * n + current])) {
      abort = current;
      stop = true;
      return;
    }
    prepare(current);
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(workers), on_phase);
  auto work = [&](unsigned tid) {
    const std::size_t chunk = (n + workers - 1) / workers;
    const std::size_t lo = std::min(n, tid * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    for (;;) {
      sync.arrive_and_wait();
      if (stop) break;
      relax_rows(current, lo, hi);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work, t);
  work(0);
  pool.clear();
  return abort;
}

/// Scale factor turning every arc weight into an integer, if the scaled
/// values leave headroom for sums of two walks of at most n arcs each.
std::optional<std::int64_t> integer_scale(const ArcGraph& g) {
  constexpr __int128 kLimit = __int128{1} << 62;
  __int128 scale = 1;
  for (const Arc& a : g.arcs()) {
    if (!a.weight.is_small()) return std::nullopt;
    const __int128 den = a.weight.denominator().get_si();
    scale = scale / std::gcd(static_cast<std::int64_t>(scale), static_cast<std::int64_t>(den)) * den;
    if (scale >= kLimit) return std::nullopt;
  }
  __int128 max_abs = 0;
  for (const Arc& a : g.arcs()) {
    const __int128 num = a.weight.numerator().get_si();
    const __int128 den = a.weight.denominator().get_si();
    const __int128 v = num < 0 ? -num : num;
    const __int128 scaled = v * (scale / den);
    if (scaled >= kLimit) return std::nullopt;
    max_abs = std::max(max_abs, scaled);
  }
  const __int128 nodes = static_cast<__int128>(g.nodes()) + 1;
  if (max_abs > 0 && 2 * nodes * max_abs >= kLimit) return std::nullopt;
  return static_cast<std::int64_t>(scale);
}

/// Turns a closed predecessor walk through `p` into a simple positive circuit.
std::vector<std::size_t> extract_cycle(const std::vector<std::int32_t>& pred, std::size_t n, std::size_t p) {
  std::vector<std::size_t> rev{p};
  std::vector<std::size_t> seen_at(n, static_cast<std::size_t>(-1));
  seen_at[p] = 0;
  std::size_t cur = p;
  for (;;) {
    const std::int32_t prev = pred[cur * n + p];
    if (prev < 0) throw std::logic_error("broken predecessor chain at abort pivot");
    cur = static_cast<std::size_t>(prev);
    rev.push_back(cur);
    if (cur == p) break;
    if (seen_at[cur] != static_cast<std::size_t>(-1)) {
      rev.erase(rev.begin(), rev.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]));
      break;
    }
    seen_at[cur] = rev.size() - 1;
    if (rev.size() > n + 1) throw std::logic_error("predecessor chain does not terminate");
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

/// Rotates a closed walk so that it starts at its smallest node.
std::vector<std::size_t> canonical_rotation(const std::vector<std::size_t>& cycle) {
  const std::size_t len = cycle.size() - 1;
  const auto first = std::min_element(cycle.begin(), cycle.end() - 1) - cycle.begin();
  std::vector<std::size_t> out;
  out.reserve(cycle.size());
  for (std::size_t s = 0; s <= len; ++s) out.push_back(cycle[(static_cast<std::size_t>(first) + s) % len]);
  return out;
}

}  // namespace

Closure Closure::compute(const ArcGraph& g, std::optional<Kernel> force) {
  Closure c;
  const std::size_t n = c.n_ = g.nodes();
  c.pred_.assign(n * n, -1);
  for (const Arc& a : g.arcs()) c.pred_[a.to * n + a.from] = static_cast<std::int32_t>(a.from);

  std::optional<std::int64_t> scale;
  if (force != Kernel::Rational) scale = integer_scale(g);
  if (force == Kernel::Int64 && !scale) throw Error(ErrorCode::Overflow, "weights do not fit the integer kernel");

  if (scale) {
    c.kernel_ = Kernel::Int64;
    c.scale_ = *scale;
    c.di_.assign(n * n, IntCells::kNeg);
    for (const Arc& a : g.arcs()) {
      const std::int64_t num = a.weight.numerator().get_si();
      const std::int64_t den = a.weight.denominator().get_si();
      c.di_[a.to * n + a.from] = num * (c.scale_ / den);
    }
    c.abort_ = floyd_warshall<IntCells>(n, c.di_, c.pred_);
  } else {
    c.kernel_ = Kernel::Rational;
    c.dr_.assign(n * n, std::nullopt);
    for (const Arc& a : g.arcs()) c.dr_[a.to * n + a.from] = a.weight;
    c.abort_ = floyd_warshall<RatCells>(n, c.dr_, c.pred_);
  }

  c.in_gamma_ = c.abort_ == n;
  if (!c.in_gamma_) {
    std::vector<std::size_t> cycle = canonical_rotation(extract_cycle(c.pred_, n, c.abort_));
    Rational weight = g.walk_weight(cycle);
    if (weight.sign() <= 0) throw std::logic_error("extracted circuit is not positive");
    c.witness_ = PathWitness{std::move(cycle), std::move(weight)};
  }
  return c;
}

const PathWitness& Closure::witness() const {
  if (in_gamma_) throw Error(ErrorCode::InvalidArgument, "graph is in Gamma; no positive circuit");
  return witness_;
}

void Closure::require_gamma() const {
  if (!in_gamma_) throw NotInGammaError(witness_);
}

TropicalScalar Closure::star(std::size_t to, std::size_t from) const {
  require_gamma();
  const std::size_t idx = to * n_ + from;
  TropicalScalar v;
  if (kernel_ == Kernel::Int64) {
    if (di_[idx] != IntCells::kNeg) v = TropicalScalar(Rational(di_[idx], scale_));
  } else if (dr_[idx]) {
    v = TropicalScalar(*dr_[idx]);
  }
  if (to == from) v = max(v, TropicalScalar(0));
  return v;
}

std::vector<std::size_t> Closure::path(std::size_t from, std::size_t to) const {
  require_gamma();
  return reconstruct_path(pred_, n_, from, to);
}

TropicalMatrix Closure::star_matrix() const {
  require_gamma();
  TropicalMatrix m(n_, n_, Flavor::MaxPlus);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m(i, j) = star(i, j);
  return m;
}

}  // namespace detail

NotInGammaError::NotInGammaError(PathWitness witness)
    : Error(ErrorCode::NotInGamma, "precedence graph has a circuit of positive weight " + witness.weight.to_string()),
      witness_(std::move(witness)) {}

GammaVerdict gamma_check(const TropicalMatrix& a) {
  const auto c = detail::Closure::compute(detail::ArcGraph::from_matrix(a));
  GammaVerdict v;
  v.in_gamma = c.in_gamma();
  v.abort_pivot = c.abort_pivot();
  if (!v.in_gamma) v.witness = c.witness();
  return v;
}

StarClosure::StarClosure(TropicalMatrix star, std::vector<std::int32_t> pred)
    : star_(std::move(star)), pred_(std::move(pred)) {}

std::vector<std::size_t> StarClosure::path(std::size_t from, std::size_t to) const {
  if (from >= star_.rows() || to >= star_.rows()) throw Error(ErrorCode::DimensionMismatch, "node out of range");
  return detail::reconstruct_path(pred_, star_.rows(), from, to);
}

TropicalMatrix kleene_star(const TropicalMatrix& a) {
  return detail::Closure::compute(detail::ArcGraph::from_matrix(a)).star_matrix();
}

StarClosure kleene_star_with_paths(const TropicalMatrix& a) {
  auto c = detail::Closure::compute(detail::ArcGraph::from_matrix(a));
  TropicalMatrix star = c.star_matrix();
  return StarClosure(std::move(star), std::move(c).take_pred());
}

std::vector<Rational> solve_subinvariant(const TropicalMatrix& a, std::span<const Rational> u) {
  if (u.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_subinvariant: u has wrong size");
  const auto c = detail::Closure::compute(detail::ArcGraph::from_matrix(a));
  const std::size_t n = a.rows();
  std::vector<Rational> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    TropicalScalar best;
    for (std::size_t j = 0; j < n; ++j) best = max(best, otimes(c.star(i, j), TropicalScalar(u[j])));
    x.push_back(best.value());
  }
  return x;
}

}  // namespace ptegkit
