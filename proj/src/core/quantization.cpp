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

#include "cartanh/quantization.hpp"

#include <mutex>
#include <unordered_map>

#include "cartanh/lie_h_modular.hpp"
#include "cartanh/twist.hpp"

namespace cartanh {

namespace {

const std::pair<QVariant, const char*> kVariantNames[] = {
    {QVariant::Char0Vertical, "char0-vertical"},
    {QVariant::Char0Horizontal, "char0-horizontal"},
    {QVariant::ModularUtVertical, "ut-vertical"},
    {QVariant::ModularUtqVertical, "utq-vertical"},
    {QVariant::ModularUtHorizontal, "ut-horizontal"},
    {QVariant::ModularUtqHorizontal, "utq-horizontal"},
    {QVariant::JordanianSp2n, "jordanian"},
};

}  // namespace

std::string to_string(QVariant v) {
  for (const auto& [k, name] : kVariantNames)
    if (k == v) return name;
  return "?";
}

QVariant parse_variant(const std::string& s) {
  for (const auto& [k, name] : kVariantNames)
    if (s == name) return k;
  if (s == "utq") return QVariant::ModularUtqVertical;
  if (s == "ut") return QVariant::ModularUtVertical;
  throw InvalidContext("unknown variant '" + s + "'");
}

bool QuantizationContext::horizontal() const {
  return variant == QVariant::Char0Horizontal || variant == QVariant::ModularUtHorizontal ||
         variant == QVariant::ModularUtqHorizontal || variant == QVariant::JordanianSp2n;
}

bool QuantizationContext::restricted() const {
  return variant == QVariant::ModularUtqVertical || variant == QVariant::ModularUtqHorizontal ||
         variant == QVariant::JordanianSp2n;
}

void QuantizationContext::validate() const {
  if (n < 1 || n > MultiIndex::kMaxRank)
    throw InvalidContext("n must lie in [1, " + std::to_string(MultiIndex::kMaxRank) + "]");
  if (k < 1 || k > n) throw InvalidContext("k must lie in [1, n]");
  if (horizontal()) {
    if (n < 2) throw InvalidContext("horizontal twists need n >= 2");
    if (m == 0 || m == k || m == -k || m < -n || m > n)
      throw InvalidContext("horizontal twists need 1 <= |m| <= n and m != +-k");
  }
  if (modular() && (p < 3 || !is_prime(p))) throw InvalidContext("modular variants need a prime p >= 3");
  if (!restricted() && (N < 0 || N > 16)) throw InvalidContext("truncation N must lie in [0, 16]");
}

LieContext QuantizationContext::lie_context() const {
  return modular() ? LieContext::modular(n, p) : LieContext::plus(n);
}

TMode QuantizationContext::mode() const {
  return restricted() ? TMode::p_truncated(p, q) : TMode::truncated(N);
}

std::string QuantizationContext::to_string() const {
  std::string s = cartanh::to_string(variant) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
  if (horizontal()) s += " m=" + std::to_string(m);
  if (modular()) s += " p=" + std::to_string(p);
  if (restricted()) {
    s += " q=" + std::to_string(q);
  } else {
    s += " N=" + std::to_string(N);
  }
  return s;
}

struct Quantization::Cache {
  std::mutex mu;
  std::unordered_map<MultiIndex, TPoly<Tensor2>, MultiIndexHash> delta;
  std::unordered_map<MultiIndex, TPoly<UElement>, MultiIndexHash> antipode;
  std::unordered_map<PBWMonomial, TPoly<Tensor2>, PBWMonomialHash> delta_mono;
  std::unordered_map<PBWMonomial, TPoly<UElement>, PBWMonomialHash> antipode_mono;
};

namespace {

TwistPair make_pair(const QuantizationContext& c) {
  c.validate();
  LieContext lc = c.lie_context();
  return c.horizontal() ? TwistPair::horizontal(lc, c.k, c.m) : TwistPair::vertical(lc, c.k);
}

template <class Map, class Key, class F>
auto cached(std::mutex& mu, Map& map, const Key& key, F compute) -> typename Map::mapped_type {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  auto value = compute();
  std::lock_guard<std::mutex> lock(mu);
  return map.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

Quantization::Quantization(QuantizationContext ctx, FormulaOptions opt)
    : ctx_(ctx),
      opt_(opt),
      env_((ctx.validate(), ctx.lie_context()), ctx.restricted()),
      pair_(make_pair(ctx)),
      cache_(std::make_shared<Cache>()) {}

void Quantization::check_admissible(const MultiIndex& a) const {
  if (a.rank() != ctx_.n || !env_.context().admissible(a))
    throw InadmissibleElement(basis_name(env_.context(), a) + " is not a basis element of " +
                              env_.context().to_string());
  if (ctx_.variant == QVariant::JordanianSp2n && a.degree() != 2)
    throw InadmissibleElement(basis_name(env_.context(), a) + " is not in the degree-0 part sp_2n");
}

int Quantization::max_ell() const {
  int cap = mode().max_degree();
  if (ctx_.modular()) cap = std::min(cap, static_cast<int>(ctx_.p) - 1);
  return cap;
}

LieElement Quantization::d_ell(const MultiIndex& a, int l) const {
  const LieContext& lc = env_.context();
  LieElement r(lc);
  if (l < 0) return r;
  if (l == 0) return LieElement::basis(lc, a);
  const int k = ctx_.k;
  if (!ctx_.horizontal()) {
    MultiIndex t = a;
    t.set(k, a.at(k) + l);
    if (!lc.admissible(t)) return r;
    Scalar c = ctx_.modular() ? coeff_Abar_vertical(a, k, l, ctx_.p) : coeff_A_vertical(a, k, l);
    r.add_term(t, c);
    return r;
  }
  for (int j = 0; j <= l; ++j) {
    MultiIndex t = horizontal_target(a, k, ctx_.m, j, l);
    if (!lc.admissible(t)) continue;
    Scalar c;
    if (ctx_.modular()) {
      auto [A, B] = coeff_ABbar_horizontal(a, k, ctx_.m, j, l, ctx_.p, opt_.bbar, opt_.horizontal);
      c = A * B;
    } else {
      Scalar A = coeff_AB_horizontal(a, k, ctx_.m, j, opt_.horizontal).first;
      Scalar B = coeff_AB_horizontal(a, k, ctx_.m, l - j, opt_.horizontal).second;
      c = A * B;
    }
    r.add_term(t, c);
  }
  return r;
}

LieElement Quantization::d_ell_oracle(const MultiIndex& a, int l) const {
  const LieContext& lc = env_.context();
  LieElement x = LieElement::basis(lc, a);
  for (int i = 0; i < l; ++i) x = bracket(pair_.e, x);
  Scalar inv = lc.field().from_rational(mpq_class(mpz_class(1), factorial(static_cast<unsigned>(l))));
  return inv * x;
}

TPoly<UElement> Quantization::one_minus_et(int s) const {
  return one_minus_et_power(env_, e(), s, mode());
}

TPoly<Tensor2> Quantization::delta(const MultiIndex& a) const {
  check_admissible(a);
  return cached(cache_->mu, cache_->delta, a, [&] {
    UElement x = env_.generator(a);
    UElement hh = h();
    const int c = a.at(ctx_.k) - a.at(-ctx_.k);
    TPoly<Tensor2> r = one_minus_et(c).map([&](const UElement& v) { return env_.tensor(x, v); });
    for (int l = 0; l <= max_ell(); ++l) {
      UElement d = env_.from_lie(d_ell(a, l));
      if (d.is_zero()) continue;
      if (opt_.stray_h1_in_delta) d = env_.multiply(d, env_.factorial_poly(hh, Scalar(1), l, FactorialKind::Rising));
      UElement left = env_.factorial_poly(hh, Scalar(0), l, FactorialKind::Rising);
      if (l % 2) left = -left;
      TPoly<UElement> right = tpoly_mul(env_, one_minus_et(-l), constant(d));
      for (int i = 0; i <= right.max_degree(); ++i) {
        if (!right[i].is_zero()) r.add_at(i + l, env_.tensor(left, right[i]));
      }
    }
    return r;
  });
}

TPoly<UElement> Quantization::antipode(const MultiIndex& a) const {
  check_admissible(a);
  return cached(cache_->mu, cache_->antipode, a, [&] {
    UElement hh = h();
    const int c = a.at(ctx_.k) - a.at(-ctx_.k);
    TPoly<UElement> sum(mode());
    for (int l = 0; l <= max_ell(); ++l) {
      UElement d = env_.from_lie(d_ell(a, l));
      if (d.is_zero()) continue;
      UElement term = env_.multiply(d, env_.factorial_poly(hh, Scalar(1), l, FactorialKind::Rising));
      if (opt_.signed_antipode && ctx_.horizontal() && l % 2) term = -term;
      sum.add_at(l, term);
    }
    TPoly<UElement> r = tpoly_mul(env_, one_minus_et(-c), sum);
    r *= -env_.field().one();
    return r;
  });
}

Scalar Quantization::counit(const MultiIndex& a) const {
  check_admissible(a);
  return env_.field().zero();
}

TPoly<Tensor2> Quantization::delta(const LieElement& x) const {
  TPoly<Tensor2> r(mode());
  for (const auto& [a, c] : x.terms()) {
    TPoly<Tensor2> d = delta(a);
    d *= c;
    r += d;
  }
  return r;
}

TPoly<UElement> Quantization::antipode(const LieElement& x) const {
  TPoly<UElement> r(mode());
  for (const auto& [a, c] : x.terms()) {
    TPoly<UElement> s = antipode(a);
    s *= c;
    r += s;
  }
  return r;
}

TPoly<Tensor2> Quantization::delta_monomial(const PBWMonomial& m) const {
  if (m.is_unit()) return tpoly_constant(mode(), env_.tensor(env_.one(), env_.one()));
  if (m.length() == 1 && m.back().exp == 1) return delta(m.back().key);
  return cached(cache_->mu, cache_->delta_mono, m, [&] {
    const PBWFactor& last = m.back();
    PBWMonomial rest = last.exp > 1 ? m.with_last_exp(last.exp - 1) : m.without_last();
    return tpoly_mul(env_, delta_monomial(rest), delta(last.key));
  });
}

TPoly<UElement> Quantization::antipode_monomial(const PBWMonomial& m) const {
  if (m.is_unit()) return constant(env_.one());
  if (m.length() == 1 && m.back().exp == 1) return antipode(m.back().key);
  return cached(cache_->mu, cache_->antipode_mono, m, [&] {
    const PBWFactor& last = m.back();
    PBWMonomial rest = last.exp > 1 ? m.with_last_exp(last.exp - 1) : m.without_last();
    return tpoly_mul(env_, antipode(last.key), antipode_monomial(rest));
  });
}

TPoly<Tensor2> Quantization::delta(const UElement& x) const {
  TPoly<Tensor2> r(mode());
  for (const auto& [m, c] : x) {
    TPoly<Tensor2> d = delta_monomial(m);
    d *= c;
    r += d;
  }
  return r;
}

TPoly<UElement> Quantization::antipode(const UElement& x) const {
  TPoly<UElement> r(mode());
  for (const auto& [m, c] : x) {
    TPoly<UElement> s = antipode_monomial(m);
    s *= c;
    r += s;
  }
  return r;
}

TPoly<Tensor3> Quantization::delta_left(const TPoly<Tensor2>& t) const {
  return apply_left(env_, t, [&](const PBWMonomial& m) { return delta_monomial(m); });
}

TPoly<Tensor3> Quantization::delta_right(const TPoly<Tensor2>& t) const {
  return apply_right(env_, t, [&](const PBWMonomial& m) { return delta_monomial(m); });
}

TPoly<UElement> Quantization::antipode_left(const TPoly<Tensor2>& t) const {
  return multiply_antipode_left(env_, t, [&](const PBWMonomial& m) { return antipode_monomial(m); });
}

TPoly<UElement> Quantization::antipode_right(const TPoly<Tensor2>& t) const {
  TPoly<UElement> r(t.mode());
  for (int i = 0; i <= t.max_degree(); ++i) {
    for (const auto& [k, c] : t[i]) {
      TPoly<UElement> left = constant(UElement(k[0], c));
      TPoly<UElement> prod = tpoly_mul(env_, left, antipode_monomial(k[1]));
      for (int j = 0; j <= prod.max_degree(); ++j) r.add_at(i + j, prod[j]);
    }
  }
  return r;
}

}  // namespace cartanh
