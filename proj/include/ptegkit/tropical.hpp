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
#include <span>
#include <string>
#include <vector>

#include "ptegkit/error.hpp"
#include "ptegkit/rational.hpp"

namespace ptegkit {

/// Element of R ∪ {-inf, +inf} with exact rational finite part.
class TropicalScalar {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  TropicalScalar() = default;  // -inf
  TropicalScalar(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT
  TropicalScalar(std::int64_t value) : kind_(Kind::Finite), value_(value) {}         // NOLINT

  static TropicalScalar neg_inf() { return {}; }
  static TropicalScalar pos_inf() {
    TropicalScalar s;
    s.kind_ = Kind::PosInf;
    return s;
  }
  /// Accepts everything Rational::parse does plus "inf", "+inf", "-inf".
  static TropicalScalar parse(std::string_view text);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  [[nodiscard]] bool is_neg_inf() const noexcept { return kind_ == Kind::NegInf; }
  [[nodiscard]] bool is_pos_inf() const noexcept { return kind_ == Kind::PosInf; }
  /// Finite part; throws InvalidArgument on an infinite value.
  [[nodiscard]] const Rational& value() const;

  /// "-inf", "inf", or the rational's canonical text.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const TropicalScalar&, const TropicalScalar&) noexcept;
  friend std::strong_ordering operator<=>(const TropicalScalar&, const TropicalScalar&) noexcept;

 private:
  Kind kind_ = Kind::NegInf;
  Rational value_;
};

TropicalScalar max(const TropicalScalar& a, const TropicalScalar& b);
TropicalScalar min(const TropicalScalar& a, const TropicalScalar& b);
/// a ⊗ b: sum, with -inf absorbing (so -inf ⊗ +inf = -inf).
TropicalScalar otimes(const TropicalScalar& a, const TropicalScalar& b);
/// a ⊛ b: sum, with +inf absorbing (so +inf ⊛ -inf = +inf).
TropicalScalar dual_otimes(const TropicalScalar& a, const TropicalScalar& b);
TropicalScalar negate(const TropicalScalar& a);

enum class Flavor : std::uint8_t { MaxPlus, MinPlus };

/// Dense matrix over R̄. The flavor records which absorption rule the
/// matrix is meant for; binary operations refuse mixed flavors.
class TropicalMatrix {
 public:
  TropicalMatrix() = default;
  TropicalMatrix(std::size_t rows, std::size_t cols, Flavor flavor);

  /// All entries set to the flavor's additive identity (-inf / +inf).
  static TropicalMatrix zero(std::size_t rows, std::size_t cols, Flavor flavor = Flavor::MaxPlus);
  /// E⊗: 0 on the diagonal, -inf elsewhere.
  static TropicalMatrix identity(std::size_t n);
  static TropicalMatrix column(std::span<const Rational> values, Flavor flavor = Flavor::MaxPlus);
  static TropicalMatrix from_rows(const std::vector<std::vector<TropicalScalar>>& rows,
                                  Flavor flavor = Flavor::MaxPlus);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] Flavor flavor() const noexcept { return flavor_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  TropicalScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const TropicalScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  [[nodiscard]] const TropicalScalar& at(std::size_t i, std::size_t j) const;

  /// Same entries under the other flavor tag. Explicit on purpose: it is the
  /// only way to combine matrices of different flavors.
  [[nodiscard]] TropicalMatrix with_flavor(Flavor flavor) const;
  /// Finite column as rationals; throws if any entry is infinite.
  [[nodiscard]] std::vector<Rational> finite_column(std::size_t col = 0) const;

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Flavor flavor_ = Flavor::MaxPlus;
  std::vector<TropicalScalar> data_;
};

/// Entrywise maximum of two same-flavor matrices.
TropicalMatrix oplus(const TropicalMatrix& a, const TropicalMatrix& b);
/// Entrywise minimum of two same-flavor matrices.
TropicalMatrix dual_oplus(const TropicalMatrix& a, const TropicalMatrix& b);
/// Max-plus product; both operands must be max-plus.
TropicalMatrix otimes(const TropicalMatrix& a, const TropicalMatrix& x);
/// Min-plus product; both operands must be min-plus.
TropicalMatrix dual_otimes(const TropicalMatrix& b, const TropicalMatrix& x);
/// A♯ = -Aᵀ, with the flavor flipped.
TropicalMatrix sharp(const TropicalMatrix& a);
/// A^{⊗r}, r >= 0 (A^{⊗0} = E⊗).
TropicalMatrix power(const TropicalMatrix& a, std::size_t r);
/// a ⪯ b entrywise.
bool preceq(const TropicalMatrix& a, const TropicalMatrix& b);

/// Walk in a precedence graph. For a circuit the first and last node coincide.
struct PathWitness {
  std::vector<std::size_t> nodes;
  Rational weight;
  [[nodiscard]] std::size_t length() const noexcept { return nodes.empty() ? 0 : nodes.size() - 1; }
};

/// Exact weight of a walk in G(A); throws InvalidArgument if a step is not an arc.
Rational walk_weight(const TropicalMatrix& a, std::span<const std::size_t> nodes);

struct GammaVerdict {
  bool in_gamma = true;
  std::optional<PathWitness> witness;  // positive circuit when !in_gamma
  /// Pivot at which the search stopped; equals rows() when in_gamma.
  std::size_t abort_pivot = 0;
};

/// Decides whether G(A) has no circuit of positive weight.
GammaVerdict gamma_check(const TropicalMatrix& a);

/// Raised by kleene_star / solve_subinvariant; carries the positive circuit.
class NotInGammaError : public Error {
 public:
  explicit NotInGammaError(PathWitness witness);
  [[nodiscard]] const PathWitness& witness() const noexcept { return witness_; }

 private:
  PathWitness witness_;
};

/// Star of a matrix in Γ together with the data needed to recover an
/// optimal walk for every finite entry.
class StarClosure {
 public:
  StarClosure(TropicalMatrix star, std::vector<std::int32_t> pred);

  [[nodiscard]] const TropicalMatrix& star() const noexcept { return star_; }
  /// Maximum-weight walk from node `from` to node `to` (i.e. realizing
  /// star(to, from)); empty when the entry is -inf. A walk from a node to
  /// itself is the single-node walk.
  [[nodiscard]] std::vector<std::size_t> path(std::size_t from, std::size_t to) const;

 private:
  TropicalMatrix star_;
  std::vector<std::int32_t> pred_;
};

/// A* = ⊕_r A^{⊗r}; throws NotInGammaError when a positive circuit exists.
TropicalMatrix kleene_star(const TropicalMatrix& a);
StarClosure kleene_star_with_paths(const TropicalMatrix& a);

/// x = A* ⊗ u, the generic solution of A ⊗ x ⪯ x.
std::vector<Rational> solve_subinvariant(const TropicalMatrix& a, std::span<const Rational> u);

}  // namespace ptegkit
