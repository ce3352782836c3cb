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

#include "ptegkit/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ptegkit {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

using u128 = unsigned __int128;

u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

mpz_class to_mpz(u128 v) {
  mpz_class hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  hi <<= 64;
  hi += static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return hi;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& value) { *this = from_mpq(value); }

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 an = num < 0 ? u128(0) - u128(num) : u128(num);
  const u128 g = gcd_u128(an, u128(den));
  u128 rn = g > 1 ? an / g : an;
  u128 rd = g > 1 ? u128(den) / g : u128(den);
  if (rn == 0) rd = 1;
  Rational out;
  if (rn <= u128(kMax) && rd <= u128(kMax)) {
    out.num_ = num < 0 ? -std::int64_t(rn) : std::int64_t(rn);
    out.den_ = std::int64_t(rd);
    return out;
  }
  mpz_class zn = to_mpz(rn);
  if (num < 0) zn = -zn;
  mpq_class q(zn, to_mpz(rd));
  return from_mpq(std::move(q));
}

Rational Rational::from_mpq(mpq_class value) {
  value.canonicalize();
  Rational out;
  if (fits_small(value.get_num()) && fits_small(value.get_den())) {
    out.num_ = value.get_num().get_si();
    out.den_ = value.get_den().get_si();
    return out;
  }
  out.big_ = std::make_shared<const mpq_class>(std::move(value));
  return out;
}

std::optional<Rational> Rational::try_parse(std::string_view text) noexcept {
  try {
    return parse(text);
  } catch (...) {
    return std::nullopt;
  }
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return fail();

  mpq_class q;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto ns = s.substr(0, slash);
    const auto ds = s.substr(slash + 1);
    if (!all_digits(ns) || !all_digits(ds)) return fail();
    mpz_class den(std::string(ds), 10);
    if (den == 0) throw std::domain_error("rational with zero denominator: '" + std::string(text) + "'");
    q = mpq_class(mpz_class(std::string(ns), 10), den);
  } else {
    std::string_view mant = s;
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      mant = s.substr(0, e);
      std::string_view es = s.substr(e + 1);
      bool eneg = false;
      if (!es.empty() && (es.front() == '-' || es.front() == '+')) {
        eneg = es.front() == '-';
        es.remove_prefix(1);
      }
      if (!all_digits(es) || es.size() > 5) return fail();
      exponent = std::stol(std::string(es));
      if (exponent > 4096) return fail();
      if (eneg) exponent = -exponent;
    }
    std::string digits;
    if (const auto dot = mant.find('.'); dot != std::string_view::npos) {
      const auto ip = mant.substr(0, dot);
      const auto fp = mant.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
          (!fp.empty() && !all_digits(fp)))
        return fail();
      digits = std::string(ip) + std::string(fp);
      exponent -= static_cast<long>(fp.size());
    } else {
      if (!all_digits(mant)) return fail();
      digits = std::string(mant);
    }
    mpz_class num(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    q = exponent < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
  }
  if (negative) q = -q;
  return from_mpq(std::move(q));
}

bool Rational::is_integer() const noexcept {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const {
  return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
  return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

Rational Rational::floor() const {
  if (big_) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    return from_mpq(mpq_class(q));
  }
  if (den_ == 1) return *this;
  std::int64_t q = num_ / den_;
  if (num_ < 0) --q;  // den_ > 1 here, so the division was inexact
  return Rational(q);
}

std::int64_t Rational::to_int64() const {
  if (big_ || den_ != 1) throw std::overflow_error("rational " + to_string() + " is not a 64-bit integer");
  return num_;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(a.num_, b.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
        Rational out;
        out.num_ = r;
        return out;
      }
    }
    return Rational::from_wide(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_,
                               __int128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational Rational::operator-() const {
  if (big_) return from_mpq(-*big_);
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(a.num_, b.num_, &r) && r != std::numeric_limits<std::int64_t>::min()) {
        Rational out;
        out.num_ = r;
        return out;
      }
    }
    return Rational::from_wide(__int128(a.num_) * b.num_, __int128(a.den_) * b.den_);
  }
  return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("division by zero");
  if (!a.big_ && !b.big_)
    return Rational::from_wide(__int128(a.num_) * b.den_, __int128(a.den_) * b.num_);
  return Rational::from_mpq(a.to_mpq() / b.to_mpq());
}

bool operator==(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    return __int128(a.num_) * b.den_ <=> __int128(b.num_) * a.den_;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace ptegkit
