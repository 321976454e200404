/*
 *   Copyright 2026 The cartanh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CARTANH_SCALAR_HPP
#define CARTANH_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace cartanh {

/// Raised when two values from different coefficient fields meet.
class ContextMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a rational cannot be pushed into F_p (denominator divisible by p).
class ReductionUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Scalar;

/// Coefficient field descriptor: p == 0 is Q, otherwise the prime field F_p.
struct Field {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Exact rational in Q, or its residue in F_p (throws ReductionUndefined).
  Scalar from_rational(const mpq_class& q) const;
  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;
};

/// An exact scalar: a reduced rational or a residue modulo a recorded prime.
///
/// Binary operations between a rational and a residue, or between residues
/// modulo different primes, throw ContextMismatch.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  Scalar(int v) : value_(mpq_class(v)) {}  // NOLINT: integer literals are rationals

  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den = 1);
  static Scalar modular(long long value, std::uint32_t p);

  Field field() const { return Field{prime()}; }
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  bool is_modular() const { return !is_rational(); }
  std::uint32_t prime() const;

  const mpq_class& as_rational() const;
  std::uint32_t residue() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Equality within one field; comparing across fields throws.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t v;
    std::uint32_t p;
  };

  explicit Scalar(Residue r) : value_(r) {}
  const Residue& res() const { return std::get<Residue>(value_); }
  void check_same(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

bool is_prime(std::uint32_t p);

/// C(a, b); zero when b < 0 or b > a. Requires a >= 0.
mpz_class binomial(long a, long b);
mpz_class factorial(unsigned n);

/// Residue of a rational modulo p: numerator * denominator^{-1}.
Scalar reduce_mod_p(const Scalar& r, std::uint32_t p);

}  // namespace cartanh

#endif  // CARTANH_SCALAR_HPP
