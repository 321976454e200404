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

#include <doctest.h>

#include <random>

#include "cartanh/multi_index.hpp"
#include "cartanh/scalar.hpp"

using namespace cartanh;

namespace {

// Independent inverse: brute-force search over residues.
long brute_inverse(long a, long p) {
  for (long x = 1; x < p; ++x) {
    if ((a * x) % p == 1) return x;
  }
  return -1;
}

Scalar random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 30);
  return Scalar::rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(2, 1) == 2);
  CHECK(binomial(1, 3) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == mpz_class("118264581564861424"));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("multi_binomial") {
  CHECK(multi_binomial(MultiIndex::unit(1, 1), MultiIndex::unit(1, 1)) == 2);
  CHECK(multi_binomial(MultiIndex(2), MultiIndex(2, {3, 1, 4, 1})) == 1);
  CHECK(multi_binomial(MultiIndex(2, {1, 1, 0, 0}), MultiIndex(2, {1, 0, 2, 0})) == 2);
  CHECK_THROWS_AS(multi_binomial(MultiIndex(1), MultiIndex(2)), std::invalid_argument);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 200; ++trial) {
    MultiIndex a(2, {d(rng), d(rng), d(rng), d(rng)});
    MultiIndex b(2, {d(rng), d(rng), d(rng), d(rng)});
    CHECK(multi_binomial(a, b) == multi_binomial(b, a));
  }
}

TEST_CASE("reduce_mod_p") {
  Scalar r = reduce_mod_p(Scalar::rational(3, 2), 5);
  CHECK(r.residue() == 4);
  CHECK(r.residue() == (3 * brute_inverse(2, 5)) % 5);
  CHECK(reduce_mod_p(Scalar::rational(0), 7).is_zero());
  CHECK_THROWS_AS(reduce_mod_p(Scalar::rational(1, 3), 3), ReductionUndefined);
  CHECK(reduce_mod_p(Scalar::rational(-1, 2), 3).residue() == 1);

  for (long p : {3L, 5L, 7L, 11L}) {
    for (long num = -12; num <= 12; ++num) {
      for (long den = 1; den <= 12; ++den) {
        if (den % p == 0) continue;
        long expect = (((num % p) + p) % p) * brute_inverse(den % p, p) % p;
        CHECK(reduce_mod_p(Scalar::rational(num, den), static_cast<std::uint32_t>(p)).residue() ==
              static_cast<std::uint32_t>(expect));
      }
    }
  }
}

TEST_CASE("reduce_mod_p is a ring homomorphism where defined") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Scalar a = random_rational(rng);
    Scalar b = random_rational(rng);
    for (std::uint32_t p : {3u, 5u, 7u}) {
      try {
        Scalar ra = reduce_mod_p(a, p);
        Scalar rb = reduce_mod_p(b, p);
        CHECK(reduce_mod_p(a * b, p) == ra * rb);
        CHECK(reduce_mod_p(a + b, p) == ra + rb);
      } catch (const ReductionUndefined&) {
      }
    }
  }
}

TEST_CASE("field axioms on random rationals and residues") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long long> res(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    Scalar a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Scalar(0));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());

    for (std::uint32_t p : {3u, 5u, 13u}) {
      Scalar x = Scalar::modular(res(rng), p), y = Scalar::modular(res(rng), p),
             z = Scalar::modular(res(rng), p);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + (-x)).is_zero());
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
      CHECK(x.residue() < p);
    }
  }
}

TEST_CASE("scalars from different fields do not mix") {
  Scalar q = Scalar::rational(1, 2);
  Scalar r3 = Scalar::modular(1, 3);
  Scalar r5 = Scalar::modular(1, 5);
  CHECK_THROWS_AS(q + r3, ContextMismatch);
  CHECK_THROWS_AS(r3 * r5, ContextMismatch);
  CHECK_THROWS_AS((void)(r3 == r5), ContextMismatch);
  CHECK_THROWS_AS(Scalar::modular(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("rationals are kept in lowest terms") {
  Scalar a = Scalar::rational(6, -4);
  CHECK(a.as_rational().get_num() == -3);
  CHECK(a.as_rational().get_den() == 2);
  CHECK(a.to_string() == "-3/2");
  CHECK(Scalar::modular(-1, 7).residue() == 6);
}

TEST_CASE("multi-index accessors and ordering") {
  MultiIndex a(2, {1, 2, 3, 4});
  CHECK(a.at(-1) == 1);
  CHECK(a.at(-2) == 2);
  CHECK(a.at(1) == 3);
  CHECK(a.at(2) == 4);
  CHECK(MultiIndex::unit(2, -2)[1] == 1);
  CHECK(MultiIndex::unit(2, 1)[2] == 1);
  CHECK(a.to_string() == "1,2;3,4");
  CHECK(MultiIndex::parse(" 1, 2 ; 3,4") == a);
  CHECK_THROWS(MultiIndex::parse("1,2;3"));
  CHECK_THROWS(a.at(3));

  // degree dominates, then flat lexicographic order
  CHECK(MultiIndex(1, {0, 2}) < MultiIndex(1, {1, 2}));
  CHECK(MultiIndex(1, {0, 2}) < MultiIndex(1, {1, 1}));
  CHECK(MultiIndex(1, {2, 0}) > MultiIndex(1, {1, 1}));

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    MultiIndex b(2, {d(rng), d(rng), d(rng), d(rng)});
    CHECK(MultiIndex::parse(b.to_string()) == b);
  }
}
