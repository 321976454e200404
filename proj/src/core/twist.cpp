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

#include "cartanh/twist.hpp"

namespace cartanh {

namespace {

int series_cap(const Enveloping& env, TMode mode) {
  int cap = mode.max_degree();
  if (!env.field().is_rational()) cap = std::min(cap, static_cast<int>(env.field().p) - 1);
  return cap;
}

Scalar inverse_factorial(const Field& k, int r) {
  return k.from_rational(mpq_class(mpz_class(1), factorial(static_cast<unsigned>(r))));
}

TPoly<Tensor3> pad_series_right(const Enveloping& env, const TPoly<Tensor2>& f) {
  return f.map([&](const Tensor2& x) { return env.pad_right(x); });
}

TPoly<Tensor3> pad_series_left(const Enveloping& env, const TPoly<Tensor2>& f) {
  return f.map([&](const Tensor2& x) { return env.pad_left(x); });
}

template <class V>
SeriesComparison compare(const Enveloping& env, const TPoly<V>& a, const TPoly<V>& b) {
  SeriesComparison r;
  r.first_difference = a.first_difference(b);
  r.equal = r.first_difference < 0;
  if (!r.equal) {
    V diff = a[r.first_difference];
    diff -= b[r.first_difference];
    r.witness = "t^" + std::to_string(r.first_difference) + ": " + env.format(diff);
  }
  return r;
}

}  // namespace

TwistElement build_twist(const Enveloping& env, const TwistPair& pair, const Scalar& a,
                         TwistVariant variant, TMode mode) {
  const Field k = env.field();
  UElement h = env.from_lie(pair.h);
  UElement e = env.from_lie(pair.e);
  TwistElement out{pair, a, variant, TPoly<Tensor2>(mode)};
  UElement er = env.one();
  int cap = series_cap(env, mode);
  for (int r = 0; r <= cap; ++r) {
    if (r > 0) er = env.multiply(er, e);
    if (er.is_zero()) break;
    FactorialKind kind = variant == TwistVariant::CurlyF ? FactorialKind::Falling : FactorialKind::Rising;
    UElement hr = env.factorial_poly(h, a, r, kind);
    Scalar c = inverse_factorial(k, r);
    if (variant == TwistVariant::CurlyF && r % 2) c = -c;
    Tensor2 term = env.tensor(hr, er);
    term *= c;
    out.body.add_at(r, term);
  }
  return out;
}

TwistUnits build_u_v(const Enveloping& env, const TwistPair& pair, const Scalar& a, TMode mode) {
  auto apply = [&](const TwistElement& t, bool antipode_left) {
    return t.body.map([&](const Tensor2& x) { return env.multiply_with_antipode(x, antipode_left); });
  };
  TwistUnits r;
  r.u = apply(build_twist(env, pair, a, TwistVariant::F, mode), true);
  r.v = apply(build_twist(env, pair, a, TwistVariant::CurlyF, mode), false);
  Scalar zero = env.field().zero();
  r.w = apply(build_twist(env, pair, zero, TwistVariant::CurlyF, mode), false);
  return r;
}

Twist Twist::basic(const Enveloping& env, const TwistPair& pair, TMode mode) {
  Scalar zero = env.field().zero();
  return {pair.describe(), build_twist(env, pair, zero, TwistVariant::CurlyF, mode).body,
          build_twist(env, pair, zero, TwistVariant::F, mode).body};
}

Twist Twist::product(const Enveloping& env, const Twist& f1, const Twist& f2) {
  TPoly<Tensor2> p12 = series_mul(env, f1.body, f2.body);
  TPoly<Tensor2> p21 = series_mul(env, f2.body, f1.body);
  int d = p12.first_difference(p21);
  if (d >= 0) {
    throw NonCommutingTwists("twists " + f1.label + " and " + f2.label + " do not commute at t^" +
                             std::to_string(d));
  }
  return {f1.label + " * " + f2.label, std::move(p12), series_mul(env, f2.inverse, f1.inverse)};
}

Twist Twist::corrupted() const {
  Twist c = *this;
  if (c.body.max_degree() >= 1) c.body.at(1) += body[1];
  c.label = "corrupted(" + label + ")";
  return c;
}

SeriesComparison verify_cocycle(const Enveloping& env, const Twist& f) {
  TPoly<Tensor3> lhs = series_mul(env, pad_series_right(env, f.body),
                                  f.body.map([&](const Tensor2& x) { return env.delta0_left(x); }));
  TPoly<Tensor3> rhs = series_mul(env, pad_series_left(env, f.body),
                                  f.body.map([&](const Tensor2& x) { return env.delta0_right(x); }));
  return compare(env, lhs, rhs);
}

TPoly<Tensor2> twist_coproduct(const Enveloping& env, const Twist& f, const UElement& x) {
  TPoly<Tensor2> d0 = tpoly_constant(f.mode(), env.delta0(x));
  return series_mul(env, series_mul(env, f.body, d0), f.inverse);
}

TPoly<UElement> twist_w(const Enveloping& env, const Twist& f) {
  return f.body.map([&](const Tensor2& x) { return env.multiply_with_antipode(x, false); });
}

TPoly<UElement> twist_w_inverse(const Enveloping& env, const Twist& f) {
  return f.inverse.map([&](const Tensor2& x) { return env.multiply_with_antipode(x, true); });
}

TPoly<UElement> twist_antipode(const Enveloping& env, const Twist& f, const UElement& x) {
  TPoly<UElement> s0 = tpoly_constant(f.mode(), env.s0(x));
  return series_mul(env, series_mul(env, twist_w(env, f), s0), twist_w_inverse(env, f));
}

SeriesComparison distinctness_probe(const Enveloping& env, const Twist& f1, const Twist& f2,
                                    const UElement& probe) {
  return compare(env, twist_coproduct(env, f1, probe), twist_coproduct(env, f2, probe));
}

TPoly<UElement> counit_left(const Enveloping& env, const TPoly<Tensor2>& t) {
  return t.map([&](const Tensor2& x) {
    UElement r;
    for (const auto& [k, c] : x) {
      if (k[0].is_unit()) r.add_term(k[1], c);
    }
    (void)env;
    return r;
  });
}

TPoly<UElement> counit_right(const Enveloping& env, const TPoly<Tensor2>& t) {
  return t.map([&](const Tensor2& x) {
    UElement r;
    for (const auto& [k, c] : x) {
      if (k[1].is_unit()) r.add_term(k[0], c);
    }
    (void)env;
    return r;
  });
}

}  // namespace cartanh
