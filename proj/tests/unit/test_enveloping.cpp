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

#include "cartanh/enveloping.hpp"
#include "cartanh/lie_h_modular.hpp"

using namespace cartanh;

namespace {

MultiIndex eps(int n, int i) { return MultiIndex::unit(n, i); }

// Random element: sum of up to three products of up to `max_len` generators.
UElement random_u(std::mt19937& rng, const Enveloping& env, const std::vector<MultiIndex>& gens,
                  int max_len) {
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> terms(1, 3);
  UElement r;
  int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    UElement w = env.scalar(env.field().from_int(coef(rng)));
    int l = len(rng);
    for (int j = 0; j < l; ++j) w = env.multiply(w, env.generator(gens[pick(rng)]));
    r += w;
  }
  return r;
}

std::vector<MultiIndex> small_plus_basis(int n, int max_degree) {
  std::vector<MultiIndex> out;
  MultiIndex a(n);
  // odometer over [0, max_degree]^{2n}
  while (true) {
    if (!a.is_zero() && a.degree() <= max_degree) out.push_back(a);
    int j = 0;
    while (j < 2 * n && a[j] == max_degree) a.set_flat(j++, 0);
    if (j == 2 * n) break;
    a.set_flat(j, a[j] + 1);
  }
  return out;
}

struct Setup {
  Enveloping env;
  std::vector<MultiIndex> gens;
};

std::vector<Setup> setups() {
  std::vector<Setup> s;
  s.push_back({Enveloping(LieContext::plus(1)), small_plus_basis(1, 3)});
  s.push_back({Enveloping(LieContext::plus(2)), small_plus_basis(2, 2)});
  s.push_back({Enveloping(LieContext::modular(1, 3)), modular_basis(1, 3)});
  s.push_back({Enveloping(LieContext::modular(1, 3), true), modular_basis(1, 3)});
  s.push_back({Enveloping(LieContext::modular(1, 5), true), modular_basis(1, 5)});
  return s;
}

}  // namespace

TEST_CASE("normal ordering of e h") {
  Enveloping env(LieContext::plus(1));
  UElement h = env.generator(eps(1, 1) + eps(1, -1));
  UElement e = env.generator(2 * eps(1, 1) + eps(1, -1));
  // one bracket rewrite: e h = h e + [e, h]
  LieElement eh = bracket(env.to_lie(e), env.to_lie(h));
  UElement expect = env.multiply(h, e) + env.from_lie(eh);
  CHECK(env.multiply(e, h) == expect);
  CHECK(env.multiply(e, h) == env.multiply(h, e) - e);
  CHECK(env.format(env.multiply(e, h)) == "-DH[1;2] + DH[1;1]*DH[1;2]");
  CHECK(env.multiply(env.one(), e) == e);
  CHECK(env.multiply(e, env.one()) == e);
}

TEST_CASE("restricted p-th powers") {
  Enveloping u(LieContext::modular(1, 3), true);
  UElement x = u.generator(MultiIndex(1, {1, 1}));
  CHECK(u.multiply(u.multiply(x, x), x) == x);
  UElement y = u.generator(MultiIndex(1, {1, 2}));
  CHECK(u.power(y, 3).is_zero());
  Enveloping big(LieContext::modular(1, 3));
  CHECK(big.power(y, 3).size() == 1);
  CHECK_THROWS(Enveloping(LieContext::plus(1), true));
}

TEST_CASE("factorial polynomials") {
  Enveloping env(LieContext::plus(1));
  UElement h = env.generator(eps(1, 1) + eps(1, -1));
  CHECK(env.factorial_poly(h, Scalar(0), 2, FactorialKind::Falling) ==
        env.multiply(h, h - env.one()));
  CHECK(env.factorial_poly(h, Scalar(0), 2, FactorialKind::Falling) == env.power(h, 2) - h);
  CHECK(env.factorial_poly(h, Scalar(3), 0, FactorialKind::Rising) == env.one());
  CHECK(env.factorial_poly(h, Scalar(1), 1, FactorialKind::Rising) == h + env.one());
}

TEST_CASE("standard coproduct") {
  Enveloping env(LieContext::plus(1));
  UElement h = env.generator(eps(1, 1) + eps(1, -1));
  UElement h2 = env.factorial_poly(h, Scalar(0), 2, FactorialKind::Falling);
  Tensor2 expect = env.tensor(h2, env.one()) + Scalar(2) * env.tensor(h, h) +
                   env.tensor(env.one(), h2);
  CHECK(env.delta0(h2) == expect);
  CHECK(env.delta0(env.one()) == env.tensor(env.one(), env.one()));

  // Delta0(h^{[r]}) = sum_i C(r, i) h^{[i]} (x) h^{[r-i]}
  for (int r = 0; r <= 5; ++r) {
    Tensor2 sum;
    for (int i = 0; i <= r; ++i) {
      sum.add_scaled(env.tensor(env.factorial_poly(h, Scalar(0), i, FactorialKind::Falling),
                                env.factorial_poly(h, Scalar(0), r - i, FactorialKind::Falling)),
                     Scalar::rational(mpq_class(binomial(r, i))));
    }
    CHECK(env.delta0(env.factorial_poly(h, Scalar(0), r, FactorialKind::Falling)) == sum);
  }
}

TEST_CASE("standard antipode and counit") {
  Enveloping env(LieContext::plus(1));
  UElement h = env.generator(eps(1, 1) + eps(1, -1));
  UElement e = env.generator(2 * eps(1, 1) + eps(1, -1));
  for (int r = 0; r <= 4; ++r) {
    for (int a : {-1, 0, 1}) {
      UElement lhs = env.s0(env.factorial_poly(h, Scalar(a), r, FactorialKind::Rising));
      UElement rhs = env.factorial_poly(h, Scalar(-a), r, FactorialKind::Falling);
      if (r % 2) rhs = -rhs;
      CHECK(lhs == rhs);
    }
    UElement er = env.power(e, r);
    CHECK(env.s0(er) == (r % 2 ? -er : er));
  }
  CHECK(env.epsilon0(env.one()) == Scalar(1));
  CHECK(env.epsilon0(e).is_zero());
  CHECK(env.epsilon0(env.multiply(e, h) + env.scalar(Scalar(5))) == Scalar(5));
}

TEST_CASE("associativity, Hopf axioms and involutive antipode") {
  std::mt19937 rng(41);
  for (auto& [env, gens] : setups()) {
    for (int trial = 0; trial < 12; ++trial) {
      UElement x = random_u(rng, env, gens, 3);
      UElement y = random_u(rng, env, gens, 2);
      UElement z = random_u(rng, env, gens, 2);
      CHECK(env.multiply(x, env.multiply(y, z)) == env.multiply(env.multiply(x, y), z));

      Tensor2 dx = env.delta0(x);
      CHECK(env.delta0_left(dx) == env.delta0_right(dx));
      // counit law
      UElement left, right;
      for (const auto& [k, c] : dx) {
        left.add_scaled(UElement(k[1], env.field().one()), c * env.epsilon0(UElement(k[0], env.field().one())));
        right.add_scaled(UElement(k[0], env.field().one()), c * env.epsilon0(UElement(k[1], env.field().one())));
      }
      CHECK(left == x);
      CHECK(right == x);
      CHECK(env.multiply_with_antipode(dx, true) == env.scalar(env.epsilon0(x)));
      CHECK(env.multiply_with_antipode(dx, false) == env.scalar(env.epsilon0(x)));
      CHECK(env.delta0(env.multiply(x, y)) == env.multiply(dx, env.delta0(y)));
      CHECK(env.s0(env.s0(x)) == x);
      CHECK(env.s0(env.multiply(x, y)) == env.multiply(env.s0(y), env.s0(x)));
    }
  }
}

TEST_CASE("commutation transport of factorial polynomials") {
  Enveloping env(LieContext::plus(1));
  UElement h = env.generator(eps(1, 1) + eps(1, -1));
  UElement e = env.generator(2 * eps(1, 1) + eps(1, -1));
  for (int s = 0; s <= 4; ++s) {
    UElement es = env.power(e, s);
    for (int m = 0; m <= 4; ++m) {
      for (int a : {0, 2}) {
        for (auto kind : {FactorialKind::Falling, FactorialKind::Rising}) {
          UElement lhs = env.multiply(es, env.factorial_poly(h, Scalar(a), m, kind));
          UElement rhs = env.multiply(env.factorial_poly(h, Scalar(a - s), m, kind), es);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("horizontal transport of rising factorials") {
  Enveloping env(LieContext::plus(2));
  const int k = 1;
  UElement h = env.generator(eps(2, k) + eps(2, -k));
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> c(0, 2);
  for (int trial = 0; trial < 12; ++trial) {
    MultiIndex a(2, {c(rng), c(rng), c(rng), c(rng)});
    if (a.is_zero()) continue;
    UElement x = env.generator(a);
    for (int s = 0; s <= 3; ++s) {
      Scalar shift(a.at(-k) - a.at(k));
      CHECK(env.multiply(x, env.factorial_poly(h, Scalar(1), s, FactorialKind::Rising)) ==
            env.multiply(env.factorial_poly(h, Scalar(1) + shift, s, FactorialKind::Rising), x));
    }
  }
}

TEST_CASE("restricted monomial basis of u(H(2;1)), p = 3") {
  Enveloping u(LieContext::modular(1, 3), true);
  CHECK(u.restricted_monomial_count() == 2187);
  auto mons = u.restricted_monomials();
  CHECK(mons.size() == 2187);
  // closure: multiplying any basis monomial by any generator stays restricted
  std::size_t checked = 0;
  for (const auto& m : mons) {
    if (m.degree() > 4) continue;
    for (const auto& g : modular_basis(1, 3)) {
      UElement prod = u.multiply(UElement(m, u.field().one()), u.generator(g));
      for (const auto& [r, c] : prod) {
        for (const auto& f : r.factors()) CHECK(f.exp < 3);
      }
      ++checked;
    }
  }
  CHECK(checked > 0);
}
