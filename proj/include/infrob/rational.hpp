// Copyright 2026 The infrob Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace infrob {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper over GMP's mpq_class. All payoffs and probabilities in
/// the library are Rationals; nothing is ever rounded.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q" with q > 0. Decimals are rejected.
  static Rational parse(std::string_view text) {
    auto fail = [&] {
      throw std::invalid_argument("not a rational: '" + std::string(text) +
                                  "'");
    };
    if (text.empty()) fail();
    std::size_t slash = text.find('/');
    auto digits_ok = [](std::string_view s, bool allow_sign) {
      if (!s.empty() && allow_sign && (s[0] == '-' || s[0] == '+'))
        s.remove_prefix(1);
      if (s.empty()) return false;
      for (char c : s)
        if (c < '0' || c > '9') return false;
      return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"}
                                        : text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) fail();
    std::string n(num);
    if (!n.empty() && n[0] == '+') n.erase(0, 1);
    mpz_class zn(n, 10), zd(std::string(den), 10);
    if (zd == 0) fail();
    return Rational(mpq_class(zn, zd));
  }

  const mpq_class& raw() const { return value_; }
  mpq_class& raw() { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) {
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), o.value_.get_mpq_t());
    return *this;
  }

  /// this += a * b without allocating a named temporary at the call site.
  void add_product(const Rational& a, const Rational& b) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
  }
  /// this -= a * b.
  void sub_product(const Rational& a, const Rational& b) {
    thread_local mpq_class scratch;
    mpq_mul(scratch.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), scratch.get_mpq_t());
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(Rational a) {
    mpq_neg(a.value_.get_mpq_t(), a.value_.get_mpq_t());
    return a;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = mpq_cmp(a.value_.get_mpq_t(), b.value_.get_mpq_t());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class value_{0};
};

}  // namespace infrob
