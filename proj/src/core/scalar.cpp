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

#include "cartanh/scalar.hpp"

#include <sstream>

namespace cartanh {

namespace {

std::uint32_t mod_reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

// Extended Euclid; p is prime and a != 0 mod p.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  long long t = 0, new_t = 1;
  long long r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p == 0) return Scalar::rational(mpq_class(mpz_class(std::to_string(v))));
  return Scalar::modular(v, p);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p == 0) return Scalar::rational(q);
  return reduce_mod_p(Scalar::rational(q), p);
}

std::string Field::to_string() const {
  return p == 0 ? std::string("Q") : "F_" + std::to_string(p);
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  mpq_class c = q;
  c.canonicalize();
  s.value_ = std::move(c);
  return s;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  return rational(mpq_class(num, den));
}

Scalar Scalar::modular(long long value, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return Scalar(Residue{mod_reduce(value, p), p});
}

std::uint32_t Scalar::prime() const { return is_rational() ? 0 : res().p; }

const mpq_class& Scalar::as_rational() const {
  if (!is_rational()) throw ContextMismatch("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (is_rational()) throw ContextMismatch("scalar is not a residue");
  return res().v;
}

bool Scalar::is_zero() const {
  if (is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return res().v == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return std::get<mpq_class>(value_) == 1;
  return res().v == 1 % res().p;
}

void Scalar::check_same(const Scalar& o) const {
  if (prime() != o.prime()) {
    throw ContextMismatch("scalar context mismatch: " + field().to_string() + " vs " +
                          o.field().to_string());
  }
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar::rational(-std::get<mpq_class>(value_));
  const auto& r = res();
  return Scalar(Residue{r.v == 0 ? 0 : r.p - r.v, r.p});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return Scalar::rational(1 / std::get<mpq_class>(value_));
  return Scalar(Residue{mod_inverse(res().v, res().p), res().p});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r.v) + o.res().v) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r.v) + r.p - o.res().v) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.v = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r.v) * o.res().v) % r.p);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.is_rational()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return a.res().v == b.res().v;
}

std::string Scalar::to_string() const {
  if (is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(res().v);
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

mpz_class binomial(long a, long b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index");
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Scalar reduce_mod_p(const Scalar& r, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("reduce_mod_p: " + std::to_string(p) + " is not prime");
  const mpq_class& q = r.as_rational();
  std::uint32_t den = mod_reduce(q.get_den(), p);
  if (den == 0) {
    throw ReductionUndefined("cannot reduce " + q.get_str() + " modulo " + std::to_string(p));
  }
  std::uint32_t num = mod_reduce(q.get_num(), p);
  return Scalar::modular(static_cast<long long>(
                             static_cast<std::uint64_t>(num) * mod_inverse(den, p) % p),
                         p);
}

}  // namespace cartanh
