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

#include "ptegkit/tropical.hpp"

#include <string>

namespace ptegkit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::NotInGamma: return "NotInGamma";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::MarkingNotBinary: return "MarkingNotBinary";
    case ErrorCode::EmptyNet: return "EmptyNet";
    case ErrorCode::IntervalInverted: return "IntervalInverted";
    case ErrorCode::IsWeaklyConsistent: return "IsWeaklyConsistent";
    case ErrorCode::HorizonInfeasible: return "HorizonInfeasible";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

TropicalScalar TropicalScalar::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return TropicalScalar(Rational::parse(text));
}

const Rational& TropicalScalar::value() const {
  if (kind_ != Kind::Finite) throw Error(ErrorCode::InvalidArgument, "infinite tropical scalar has no finite value");
  return value_;
}

std::string TropicalScalar::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: break;
  }
  return value_.to_string();
}

bool operator==(const TropicalScalar& a, const TropicalScalar& b) noexcept {
  return a.kind_ == b.kind_ && (a.kind_ != TropicalScalar::Kind::Finite || a.value_ == b.value_);
}

std::strong_ordering operator<=>(const TropicalScalar& a, const TropicalScalar& b) noexcept {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != TropicalScalar::Kind::Finite) return std::strong_ordering::equal;
  return a.value_ <=> b.value_;
}

TropicalScalar max(const TropicalScalar& a, const TropicalScalar& b) { return a < b ? b : a; }
TropicalScalar min(const TropicalScalar& a, const TropicalScalar& b) { return b < a ? b : a; }

TropicalScalar otimes(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return TropicalScalar::neg_inf();
  if (a.is_pos_inf() || b.is_pos_inf()) return TropicalScalar::pos_inf();
  return a.value() + b.value();
}

TropicalScalar dual_otimes(const TropicalScalar& a, const TropicalScalar& b) {
  if (a.is_pos_inf() || b.is_pos_inf()) return TropicalScalar::pos_inf();
  if (a.is_neg_inf() || b.is_neg_inf()) return TropicalScalar::neg_inf();
  return a.value() + b.value();
}

TropicalScalar negate(const TropicalScalar& a) {
  if (a.is_neg_inf()) return TropicalScalar::pos_inf();
  if (a.is_pos_inf()) return TropicalScalar::neg_inf();
  return -a.value();
}

namespace {

TropicalScalar additive_zero(Flavor f) {
  return f == Flavor::MaxPlus ? TropicalScalar::neg_inf() : TropicalScalar::pos_inf();
}

void require_same_shape(const TropicalMatrix& a, const TropicalMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": dimension mismatch");
  if (a.flavor() != b.flavor()) throw Error(ErrorCode::FlavorMismatch, std::string(op) + ": flavor mismatch");
}

void require_flavor(const TropicalMatrix& a, Flavor f, const char* op) {
  if (a.flavor() != f) throw Error(ErrorCode::FlavorMismatch, std::string(op) + ": wrong flavor");
}

}  // namespace

TropicalMatrix::TropicalMatrix(std::size_t rows, std::size_t cols, Flavor flavor)
    : rows_(rows), cols_(cols), flavor_(flavor), data_(rows * cols, additive_zero(flavor)) {}

TropicalMatrix TropicalMatrix::zero(std::size_t rows, std::size_t cols, Flavor flavor) {
  return TropicalMatrix(rows, cols, flavor);
}

TropicalMatrix TropicalMatrix::identity(std::size_t n) {
  TropicalMatrix e(n, n, Flavor::MaxPlus);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = TropicalScalar(0);
  return e;
}

TropicalMatrix TropicalMatrix::column(std::span<const Rational> values, Flavor flavor) {
  TropicalMatrix m(values.size(), 1, flavor);
  for (std::size_t i = 0; i < values.size(); ++i) m(i, 0) = TropicalScalar(values[i]);
  return m;
}

TropicalMatrix TropicalMatrix::from_rows(const std::vector<std::vector<TropicalScalar>>& rows, Flavor flavor) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  TropicalMatrix m(r, c, flavor);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(ErrorCode::DimensionMismatch, "from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

const TropicalScalar& TropicalMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::DimensionMismatch, "matrix index out of range");
  return (*this)(i, j);
}

TropicalMatrix TropicalMatrix::with_flavor(Flavor flavor) const {
  TropicalMatrix m = *this;
  m.flavor_ = flavor;
  return m;
}

std::vector<Rational> TropicalMatrix::finite_column(std::size_t col) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, col).value());
  return out;
}

TropicalMatrix oplus(const TropicalMatrix& a, const TropicalMatrix& b) {
  require_same_shape(a, b, "oplus");
  TropicalMatrix m(a.rows(), a.cols(), a.flavor());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = max(a(i, j), b(i, j));
  return m;
}

TropicalMatrix dual_oplus(const TropicalMatrix& a, const TropicalMatrix& b) {
  require_same_shape(a, b, "dual_oplus");
  TropicalMatrix m(a.rows(), a.cols(), a.flavor());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = min(a(i, j), b(i, j));
  return m;
}

TropicalMatrix otimes(const TropicalMatrix& a, const TropicalMatrix& x) {
  require_flavor(a, Flavor::MaxPlus, "otimes");
  require_flavor(x, Flavor::MaxPlus, "otimes");
  if (a.cols() != x.rows()) throw Error(ErrorCode::DimensionMismatch, "otimes: inner dimensions differ");
  TropicalMatrix m(a.rows(), x.cols(), Flavor::MaxPlus);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_neg_inf()) continue;
      for (std::size_t h = 0; h < x.cols(); ++h) m(i, h) = max(m(i, h), otimes(a(i, k), x(k, h)));
    }
  return m;
}

TropicalMatrix dual_otimes(const TropicalMatrix& b, const TropicalMatrix& x) {
  require_flavor(b, Flavor::MinPlus, "dual_otimes");
  require_flavor(x, Flavor::MinPlus, "dual_otimes");
  if (b.cols() != x.rows()) throw Error(ErrorCode::DimensionMismatch, "dual_otimes: inner dimensions differ");
  TropicalMatrix m(b.rows(), x.cols(), Flavor::MinPlus);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t k = 0; k < b.cols(); ++k) {
      if (b(i, k).is_pos_inf()) continue;
      for (std::size_t h = 0; h < x.cols(); ++h) m(i, h) = min(m(i, h), dual_otimes(b(i, k), x(k, h)));
    }
  return m;
}

TropicalMatrix sharp(const TropicalMatrix& a) {
  const Flavor flipped = a.flavor() == Flavor::MaxPlus ? Flavor::MinPlus : Flavor::MaxPlus;
  TropicalMatrix m(a.cols(), a.rows(), flipped);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(j, i) = negate(a(i, j));
  return m;
}

TropicalMatrix power(const TropicalMatrix& a, std::size_t r) {
  require_flavor(a, Flavor::MaxPlus, "power");
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "power: matrix is not square");
  TropicalMatrix result = TropicalMatrix::identity(a.rows());
  TropicalMatrix base = a;
  while (r > 0) {
    if (r & 1U) result = otimes(result, base);
    r >>= 1U;
    if (r > 0) base = otimes(base, base);
  }
  return result;
}

bool preceq(const TropicalMatrix& a, const TropicalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::DimensionMismatch, "preceq: dimension mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (b(i, j) < a(i, j)) return false;
  return true;
}

Rational walk_weight(const TropicalMatrix& a, std::span<const std::size_t> nodes) {
  Rational total;
  for (std::size_t s = 1; s < nodes.size(); ++s) {
    const std::size_t from = nodes[s - 1];
    const std::size_t to = nodes[s];
    const TropicalScalar& w = a.at(to, from);
    if (!w.is_finite()) throw Error(ErrorCode::InvalidArgument, "walk uses a missing arc");
    total += w.value();
  }
  return total;
}

}  // namespace ptegkit
