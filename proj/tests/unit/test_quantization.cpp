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

#include <algorithm>

#include "cartanh/lie_h_modular.hpp"
#include "cartanh/quantization.hpp"
#include "cartanh/twist.hpp"

using namespace cartanh;

namespace {

std::vector<MultiIndex> plus_basis(int n, int maxdeg) {
  std::vector<MultiIndex> out;
  MultiIndex a(n);
  for (;;) {
    if (!a.is_zero() && a.degree() <= maxdeg) out.push_back(a);
    int j = 0;
    while (j < 2 * n && a[j] == maxdeg) a.set_flat(j++, 0);
    if (j == 2 * n) break;
    a.set_flat(j, a[j] + 1);
  }
  return out;
}

QuantizationContext ctx(QVariant v, int n, int k, int m, std::uint32_t p, long q, int N) {
  return QuantizationContext{v, n, k, m, p, q, N};
}

bool oracle_agrees(const Quantization& Q, const std::vector<MultiIndex>& alphas, int max_l) {
  for (const auto& a : alphas)
    for (int l = 0; l <= max_l; ++l)
      if (!(Q.d_ell(a, l) == Q.d_ell_oracle(a, l))) return false;
  return true;
}

TPoly<Tensor2> tensor_series(const Enveloping& env, const TPoly<UElement>& a, const TPoly<UElement>& b) {
  return tpoly_mul(a, b, [&](const UElement& x, const UElement& y) { return env.tensor(x, y); });
}

Scalar r(long num, long den = 1) { return Scalar::rational(num, den); }

}  // namespace

TEST_CASE("vertical coefficient values") {
  MultiIndex a(1, {1, 2});  // a_-1 = 1, a_1 = 2: a_k - 2 a_-k = 0
  CHECK(coeff_A_vertical(a, 1, 1) == r(0));
  CHECK(coeff_A_vertical(a, 1, 0) == r(1));
  CHECK(coeff_A_vertical(a, 1, -1) == r(0));
  CHECK(coeff_A_vertical(MultiIndex(1, {0, 1}), 1, 2) == r(1));
  CHECK(coeff_A_vertical(MultiIndex(1, {0, 3}), 1, 2) == r(6));

  CHECK(coeff_Abar_vertical(MultiIndex(1, {0, 1}), 1, 1, 3) == Scalar::modular(2, 3));
  CHECK(coeff_Abar_vertical(MultiIndex(1, {0, 1}), 1, 0, 3) == Scalar::modular(1, 3));
  // a + l e_k leaves [0, tau]
  CHECK(coeff_Abar_vertical(MultiIndex(1, {0, 2}), 1, 1, 3).is_zero());
  // a + l e_k = tau
  CHECK(coeff_Abar_vertical(MultiIndex(1, {2, 1}), 1, 1, 3).is_zero());
}

TEST_CASE("horizontal coefficient values") {
  const int k = 1, m = 2;
  MultiIndex a(2, {2, 1, 0, 1});  // a_-1 = 2, a_-2 = 1, a_1 = 0, a_2 = 1
  auto [A0, B0] = coeff_AB_horizontal(a, k, m, 0);
  CHECK(A0 == r(1));
  CHECK(B0 == r(1));
  // the bracket oracle carries (-1)^j on A_j
  CHECK(coeff_AB_horizontal(a, k, m, 1).first == r(-2));
  HorizontalOptions printed;
  printed.a_sign = ASign::AsPrinted;
  CHECK(coeff_AB_horizontal(a, k, m, 1, printed).first == r(2));
  CHECK(coeff_AB_horizontal(a, k, m, 3).first == r(0));
  CHECK(coeff_AB_horizontal(a, k, m, 1).second == r(sigma_sign(m)));
  CHECK(coeff_AB_horizontal(a, k, m, 2).second == r(0));

  auto [Ab0, Bb0] = coeff_ABbar_horizontal(a, k, m, 0, 0, 5);
  CHECK(Ab0 == Scalar::modular(1, 5));
  CHECK(Bb0 == Scalar::modular(1, 5));
  CHECK(coeff_ABbar_horizontal(a, k, m, 1, 1, 5).first == Scalar::modular(-2, 5));
  CHECK(coeff_ABbar_horizontal(a, k, m, 1, 1, 5, BbarIndex::Proof, printed).first == Scalar::modular(2, 5));

  CHECK(coeff_A_ik(a, -1, k) == r(1));
  CHECK(coeff_A_ik(a, 0, k) == r(a.at(-k)));
  MultiIndex toral = MultiIndex::unit(2, 1) + MultiIndex::unit(2, -1);
  CHECK(coeff_A_ik(toral, 1, 1) == r(1));
}

TEST_CASE("coefficient families agree with repeated brackets") {
  SUBCASE("vertical, char 0 and mod p") {
    Quantization Q0(ctx(QVariant::Char0Vertical, 1, 1, 0, 0, 0, 4));
    CHECK(oracle_agrees(Q0, plus_basis(1, 5), 4));
    for (std::uint32_t p : {3u, 5u}) {
      Quantization Qp(ctx(QVariant::ModularUtVertical, 1, 1, 0, p, 0, p - 1));
      CHECK(oracle_agrees(Qp, modular_basis(1, p), static_cast<int>(p) - 1));
    }
    Quantization Q2(ctx(QVariant::ModularUtVertical, 2, 2, 0, 3, 0, 2));
    CHECK(oracle_agrees(Q2, modular_basis(2, 3), 2));
  }
  SUBCASE("horizontal, both signs of m") {
    for (int m : {2, -2}) {
      Quantization Q0(ctx(QVariant::Char0Horizontal, 2, 1, m, 0, 0, 4));
      CHECK(oracle_agrees(Q0, plus_basis(2, 3), 4));
      Quantization Qp(ctx(QVariant::ModularUtHorizontal, 2, 1, m, 3, 0, 2));
      CHECK(oracle_agrees(Qp, modular_basis(2, 3), 2));
    }
  }
  SUBCASE("statement reading of B-bar and a flipped sigma both disagree") {
    FormulaOptions stmt;
    stmt.bbar = BbarIndex::StatementAsPrinted;
    Quantization Qs(ctx(QVariant::ModularUtHorizontal, 2, 1, 2, 5, 0, 4), stmt);
    CHECK_FALSE(oracle_agrees(Qs, modular_basis(2, 5), 4));
    FormulaOptions flip;
    flip.horizontal.flip_sigma = true;
    Quantization Qf(ctx(QVariant::Char0Horizontal, 2, 1, 2, 0, 0, 3), flip);
    CHECK_FALSE(oracle_agrees(Qf, plus_basis(2, 3), 3));
    FormulaOptions unsigned_a;
    unsigned_a.horizontal.a_sign = ASign::AsPrinted;
    Quantization Qa(ctx(QVariant::Char0Horizontal, 2, 1, 2, 0, 0, 3), unsigned_a);
    CHECK_FALSE(oracle_agrees(Qa, plus_basis(2, 3), 3));
  }
}

TEST_CASE("reduction mod p of the vertical d^(l)") {
  for (std::uint32_t p : {3u, 5u}) {
    const int N = static_cast<int>(p) - 1;
    Quantization Q0(ctx(QVariant::Char0Vertical, 1, 1, 0, 0, 0, N));
    Quantization Qp(ctx(QVariant::ModularUtVertical, 1, 1, 0, p, 0, N));
    // the char-0 e reduces to the modular e = 2 D_H(x^{(2e_k + e_-k)})
    CHECK(reduce_to_modular(Q0.pair().e, p) == Qp.pair().e);
    Field F{p};
    for (const auto& a : modular_basis(1, p)) {
      Scalar fact = F.from_rational(mpq_class(multi_factorial(a)));
      for (int l = 0; l <= N; ++l) {
        CAPTURE(a.to_string());
        CAPTURE(l);
        CHECK(reduce_to_modular(Q0.d_ell(a, l), p) == fact * Qp.d_ell(a, l));
      }
    }
  }
}

TEST_CASE("closed forms equal twist conjugation") {
  struct Cell {
    QVariant v;
    int n, m, maxdeg, N;
  };
  for (Cell c : {Cell{QVariant::Char0Vertical, 1, 0, 3, 3}, Cell{QVariant::Char0Horizontal, 2, -2, 2, 3},
                 Cell{QVariant::Char0Horizontal, 2, 2, 2, 3}}) {
    Quantization Q(ctx(c.v, c.n, 1, c.m, 0, 0, c.N));
    const Enveloping& env = Q.env();
    Twist f = Twist::basic(env, Q.pair(), Q.mode());
    for (const auto& a : plus_basis(c.n, c.maxdeg)) {
      CAPTURE(a.to_string());
      UElement x = env.generator(a);
      CHECK(Q.delta(a) == twist_coproduct(env, f, x));
      CHECK(Q.antipode(a) == twist_antipode(env, f, x));
      CHECK(Q.counit(a).is_zero());
    }
  }
}

TEST_CASE("closed-form examples") {
  Quantization Q(ctx(QVariant::Char0Vertical, 1, 1, 0, 0, 0, 3));
  const Enveloping& env = Q.env();
  UElement e = Q.e();
  // Delta(e) = e (x) (1 - et) + 1 (x) e
  TPoly<Tensor2> de = tensor_series(env, Q.constant(e), Q.one_minus_et(1));
  de += tensor_left_one(env, Q.constant(e));
  CHECK(Q.delta(Q.pair().e) == de);
  // S(e) = -(1 - et)^{-1} e
  auto se = tpoly_mul(env, Q.one_minus_et(-1), Q.constant(-e));
  CHECK(Q.antipode(Q.pair().e) == se);

  // Delta(h) = h (x) f + 1 (x) h in u_{t,q}, p = 3
  for (long q : {0L, 1L}) {
    Quantization U(ctx(QVariant::ModularUtqVertical, 1, 1, 0, 3, q, 0));
    const Enveloping& u = U.env();
    TPoly<Tensor2> dh = tensor_series(u, U.constant(U.h()), U.one_minus_et(-1));
    dh += tensor_left_one(u, U.constant(U.h()));
    CHECK(U.delta(U.pair().h) == dh);
    auto sh = tpoly_mul(u, U.constant(U.h()), U.one_minus_et(1));
    sh *= u.field().from_int(-1);
    CHECK(U.antipode(U.pair().h) == sh);
  }
}

TEST_CASE("misprinted variants are rejected") {
  SUBCASE("(-1)^l inside the horizontal antipode") {
    FormulaOptions signed_s;
    signed_s.signed_antipode = true;
    QuantizationContext c = ctx(QVariant::Char0Horizontal, 2, 1, 2, 0, 0, 3);
    Quantization good(c), bad(c, signed_s);
    Twist f = Twist::basic(good.env(), good.pair(), good.mode());
    int disagree = 0;
    for (const auto& a : plus_basis(2, 2)) {
      UElement x = good.env().generator(a);
      CHECK(good.antipode(a) == twist_antipode(good.env(), f, x));
      if (!(bad.antipode(a) == twist_antipode(good.env(), f, x))) ++disagree;
    }
    CHECK(disagree > 0);
  }
  SUBCASE("extra h_1 factor in the modular coproduct") {
    FormulaOptions stray;
    stray.stray_h1_in_delta = true;
    QuantizationContext c = ctx(QVariant::ModularUtqVertical, 1, 1, 0, 3, 1, 0);
    Quantization good(c), bad(c, stray);
    int broken = 0;
    for (const auto& a : modular_basis(1, 3)) {
      auto d = good.delta(a);
      CHECK(good.delta_left(d) == good.delta_right(d));
      auto db = bad.delta(a);
      if (!(bad.delta_left(db) == bad.delta_right(db)) || !(db == d)) ++broken;
    }
    CHECK(broken > 0);
  }
}

TEST_CASE("u_{t,q} Hopf axioms, n = 1, p = 3") {
  for (long q : {0L, 1L}) {
    Quantization Q(ctx(QVariant::ModularUtqVertical, 1, 1, 0, 3, q, 0));
    const Enveloping& env = Q.env();
    for (const auto& a : modular_basis(1, 3)) {
      CAPTURE(a.to_string());
      auto d = Q.delta(a);
      CHECK(Q.delta_left(d) == Q.delta_right(d));
      CHECK(counit_left(env, d) == Q.constant(env.generator(a)));
      CHECK(counit_right(env, d) == Q.constant(env.generator(a)));
      CHECK(Q.antipode_left(d).is_zero());
      CHECK(Q.antipode_right(d).is_zero());
      auto d3 = tpoly_mul(env, d, tpoly_mul(env, d, d));
      CHECK(d3 == (is_toral(a) ? d : TPoly<Tensor2>(Q.mode())));
      auto s = Q.antipode(a);
      auto s3 = tpoly_mul(env, s, tpoly_mul(env, s, s));
      CHECK(s3 == (is_toral(a) ? s : TPoly<UElement>(Q.mode())));
      // t = 0 gives the standard structure
      CHECK(d[0] == env.delta0(env.generator(a)));
      CHECK(Q.antipode(a)[0] == env.s0(env.generator(a)));
    }
    // Radford relations
    auto h = Q.constant(Q.h()), f = Q.one_minus_et(-1), one = Q.constant(env.one());
    auto mul = [&](const TPoly<UElement>& x, const TPoly<UElement>& y) { return tpoly_mul(env, x, y); };
    CHECK(mul(h, f) - mul(f, h) == mul(f, f) - f);
    CHECK(mul(h, mul(h, h)) == h);
    CHECK(mul(f, mul(f, f)) == one);
  }
}

TEST_CASE("contexts and admissibility") {
  CHECK_THROWS_AS(ctx(QVariant::Char0Horizontal, 1, 1, 2, 0, 0, 3).validate(), InvalidContext);
  CHECK_THROWS_AS(ctx(QVariant::Char0Horizontal, 2, 1, -1, 0, 0, 3).validate(), InvalidContext);
  CHECK_THROWS_AS(ctx(QVariant::ModularUtqVertical, 1, 1, 0, 4, 0, 0).validate(), InvalidContext);
  CHECK_THROWS_AS(ctx(QVariant::Char0Vertical, 1, 2, 0, 0, 0, 3).validate(), InvalidContext);
  CHECK_NOTHROW(ctx(QVariant::ModularUtqHorizontal, 2, 1, -2, 3, 1, 0).validate());

  Quantization U(ctx(QVariant::ModularUtqVertical, 1, 1, 0, 3, 0, 0));
  CHECK_THROWS_AS(U.check_admissible(MultiIndex::constant(1, 2)), InadmissibleElement);
  CHECK_THROWS_AS(U.check_admissible(MultiIndex(1)), InadmissibleElement);
  CHECK_THROWS_AS(U.delta(MultiIndex(1, {3, 0})), InadmissibleElement);
  Quantization J(ctx(QVariant::JordanianSp2n, 2, 1, -2, 5, 1, 0));
  CHECK_THROWS_AS(J.check_admissible(MultiIndex(2, {1, 0, 0, 0})), InadmissibleElement);
  CHECK_NOTHROW(J.check_admissible(MultiIndex(2, {0, 2, 0, 0})));

  for (QVariant v : {QVariant::Char0Vertical, QVariant::Char0Horizontal, QVariant::ModularUtVertical,
                     QVariant::ModularUtqVertical, QVariant::ModularUtHorizontal, QVariant::ModularUtqHorizontal,
                     QVariant::JordanianSp2n})
    CHECK(parse_variant(to_string(v)) == v);
  CHECK(parse_variant("utq") == QVariant::ModularUtqVertical);
  CHECK_THROWS_AS(parse_variant("vertical"), InvalidContext);
}
