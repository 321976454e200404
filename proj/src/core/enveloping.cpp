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

#include "cartanh/enveloping.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "cartanh/lie_h_modular.hpp"

namespace cartanh {

PBWMonomial::PBWMonomial(std::vector<PBWFactor> factors) : f_(std::move(factors)) {
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (f_[i].exp < 1) throw std::invalid_argument("PBW exponent must be positive");
    if (i > 0 && !(f_[i - 1].key < f_[i].key)) {
      throw std::invalid_argument("PBW factors must strictly increase");
    }
  }
  rehash();
}

PBWMonomial PBWMonomial::generator(const MultiIndex& key, int exp) {
  return PBWMonomial({PBWFactor{key, exp}});
}

int PBWMonomial::degree() const {
  int d = 0;
  for (const auto& f : f_) d += f.exp;
  return d;
}

PBWMonomial PBWMonomial::without_last() const {
  PBWMonomial m;
  m.f_.assign(f_.begin(), f_.end() - 1);
  m.rehash();
  return m;
}

PBWMonomial PBWMonomial::appended(const MultiIndex& key, int exp) const {
  PBWMonomial m = *this;
  m.f_.push_back({key, exp});
  m.rehash();
  return m;
}

PBWMonomial PBWMonomial::with_last_exp(int exp) const {
  PBWMonomial m = *this;
  m.f_.back().exp = exp;
  m.rehash();
  return m;
}

void PBWMonomial::rehash() {
  std::size_t h = f_.size();
  for (const auto& f : f_) {
    hash_combine(h, f.key.hash());
    hash_combine(h, static_cast<std::size_t>(f.exp));
  }
  hash_ = h;
}

std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  std::size_t n = std::min(a.f_.size(), b.f_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.f_[i].key <=> b.f_[i].key; c != 0) return c;
    if (auto c = b.f_[i].exp <=> a.f_[i].exp; c != 0) return c;
  }
  return a.f_.size() <=> b.f_.size();
}

namespace {

struct MonomialKeyHash {
  std::size_t operator()(const std::pair<PBWMonomial, MultiIndex>& k) const {
    std::size_t h = k.first.hash();
    hash_combine(h, k.second.hash());
    return h;
  }
};

struct MonomialPairHash {
  std::size_t operator()(const std::pair<PBWMonomial, PBWMonomial>& k) const {
    std::size_t h = k.first.hash();
    hash_combine(h, k.second.hash());
    return h;
  }
};

struct IndexPairHash {
  std::size_t operator()(const std::pair<MultiIndex, MultiIndex>& k) const {
    std::size_t h = k.first.hash();
    hash_combine(h, k.second.hash());
    return h;
  }
};

template <class Map, class Key>
typename Map::mapped_type lookup(std::shared_mutex& mu, const Map& map, const Key& key) {
  std::shared_lock lock(mu);
  auto it = map.find(key);
  return it == map.end() ? typename Map::mapped_type{} : it->second;
}

}  // namespace

struct Enveloping::Caches {
  std::shared_mutex mu;
  std::unordered_map<std::pair<PBWMonomial, MultiIndex>, std::shared_ptr<const UElement>,
                     MonomialKeyHash>
      times;
  std::unordered_map<std::pair<PBWMonomial, PBWMonomial>, std::shared_ptr<const UElement>,
                     MonomialPairHash>
      products;
  std::unordered_map<std::pair<MultiIndex, MultiIndex>,
                     std::shared_ptr<const std::vector<std::pair<MultiIndex, Scalar>>>,
                     IndexPairHash>
      brackets;
};

Enveloping::Enveloping(LieContext ctx, bool restricted)
    : ctx_(ctx), restricted_(restricted), caches_(std::make_shared<Caches>()) {
  if (restricted && !ctx.is_modular()) {
    throw std::invalid_argument("restricted enveloping algebra needs H(2n;1)");
  }
}

Scalar Enveloping::integer(const mpz_class& v) const {
  return field().from_rational(mpq_class(v));
}

UElement Enveloping::one() const { return UElement(PBWMonomial(), field().one()); }

UElement Enveloping::scalar(const Scalar& c) const { return UElement(PBWMonomial(), c); }

UElement Enveloping::generator(const MultiIndex& key) const {
  if (!ctx_.admissible(key)) throw std::invalid_argument("not a basis index: " + key.to_string());
  return UElement(PBWMonomial::generator(key), field().one());
}

UElement Enveloping::from_lie(const LieElement& x) const {
  if (!(x.context() == ctx_)) throw ContextMismatch("Lie element from another algebra");
  UElement r;
  for (const auto& [a, c] : x.terms()) r.add_term(PBWMonomial::generator(a), c);
  return r;
}

LieElement Enveloping::to_lie(const UElement& x) const {
  LieElement r(ctx_);
  for (const auto& [m, c] : x) {
    if (m.length() != 1 || m.back().exp != 1) {
      throw std::invalid_argument("element is not in the Lie algebra");
    }
    r.add_term(m.back().key, c);
  }
  return r;
}

const std::vector<std::pair<MultiIndex, Scalar>>& Enveloping::lie_bracket(
    const MultiIndex& x, const MultiIndex& y) const {
  auto key = std::make_pair(x, y);
  if (auto hit = lookup(caches_->mu, caches_->brackets, key)) return *hit;
  auto v = std::make_shared<std::vector<std::pair<MultiIndex, Scalar>>>();
  bracket_basis(ctx_, x, y, [&](const MultiIndex& g, const Scalar& c) {
    if (ctx_.admissible(g)) v->emplace_back(g, c);
  });
  std::unique_lock lock(caches_->mu);
  auto [it, inserted] = caches_->brackets.try_emplace(key, std::move(v));
  return *it->second;
}

std::shared_ptr<const UElement> Enveloping::times_generator(const PBWMonomial& m,
                                                            const MultiIndex& x) const {
  if (m.is_unit()) {
    return std::make_shared<const UElement>(PBWMonomial::generator(x), field().one());
  }
  const PBWFactor& last = m.back();
  if (last.key < x) {
    return std::make_shared<const UElement>(m.appended(x, 1), field().one());
  }
  if (last.key == x) {
    if (restricted_ && last.exp + 1 == static_cast<int>(ctx_.p)) {
      // x^p = x^{[p]}: the generator itself when toral, zero otherwise.
      if (!is_toral(x)) return std::make_shared<const UElement>();
      return std::make_shared<const UElement>(m.without_last().appended(x, 1), field().one());
    }
    return std::make_shared<const UElement>(m.with_last_exp(last.exp + 1), field().one());
  }

  auto key = std::make_pair(m, x);
  if (auto hit = lookup(caches_->mu, caches_->times, key)) return hit;

  // y^e x = sum_i C(e, i) ((ad y)^i x) y^{e-i}
  const MultiIndex y = last.key;
  const int e = last.exp;
  PBWMonomial prefix = m.without_last();
  auto result = std::make_shared<UElement>();
  std::vector<std::pair<MultiIndex, Scalar>> ad{{x, field().one()}};
  for (int i = 0; i <= e && !ad.empty(); ++i) {
    if (i > 0) {
      LieElement next(ctx_);
      for (const auto& [z, cz] : ad) {
        for (const auto& [g, cg] : lie_bracket(y, z)) next.add_term(g, cz * cg);
      }
      ad.assign(next.terms().begin(), next.terms().end());
    }
    Scalar binom = integer(binomial(e, i));
    for (const auto& [z, cz] : ad) {
      UElement part = *times_generator(prefix, z);
      part = times_generator_power(part, y, e - i);
      result->add_scaled(part, binom * cz);
    }
  }

  std::unique_lock lock(caches_->mu);
  auto [it, inserted] = caches_->times.try_emplace(key, std::move(result));
  return it->second;
}

UElement Enveloping::times_generator_power(const UElement& u, const MultiIndex& x, int k) const {
  UElement cur = u;
  for (int s = 0; s < k && !cur.is_zero(); ++s) {
    UElement next;
    for (const auto& [m, c] : cur) next.add_scaled(*times_generator(m, x), c);
    cur = std::move(next);
  }
  return cur;
}

UElement Enveloping::multiply_monomials(const PBWMonomial& a, const PBWMonomial& b) const {
  if (b.is_unit()) return UElement(a, field().one());
  if (a.is_unit()) return UElement(b, field().one());
  auto key = std::make_pair(a, b);
  if (auto hit = lookup(caches_->mu, caches_->products, key)) return *hit;
  UElement r(a, field().one());
  for (const auto& f : b.factors()) r = times_generator_power(r, f.key, f.exp);
  std::unique_lock lock(caches_->mu);
  auto [it, inserted] = caches_->products.try_emplace(key, std::make_shared<const UElement>(r));
  return *it->second;
}

UElement Enveloping::multiply(const UElement& a, const UElement& b) const {
  UElement r;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) r.add_scaled(multiply_monomials(ma, mb), ca * cb);
  }
  return r;
}

UElement Enveloping::power(const UElement& a, int k) const {
  if (k < 0) throw std::invalid_argument("negative power in U(L)");
  UElement r = one();
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

UElement Enveloping::commutator(const UElement& a, const UElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

Tensor2 Enveloping::tensor(const UElement& a, const UElement& b) const {
  Tensor2 r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) r.add_term({ma, mb}, ca * cb);
  return r;
}

Tensor3 Enveloping::tensor(const UElement& a, const UElement& b, const UElement& c) const {
  Tensor3 r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      for (const auto& [mc, cc] : c) r.add_term({ma, mb, mc}, ca * cb * cc);
  return r;
}

namespace {

// Delta0 of an ordered monomial: every factor splits binomially and both
// sides stay ordered.
template <class Emit>
void split_monomial(const PBWMonomial& m, const Field& field, Emit emit) {
  const auto& fs = m.factors();
  std::vector<int> take(fs.size(), 0);
  std::function<void(std::size_t, mpz_class)> rec = [&](std::size_t i, mpz_class w) {
    if (i == fs.size()) {
      std::vector<PBWFactor> left, right;
      for (std::size_t j = 0; j < fs.size(); ++j) {
        if (take[j] > 0) left.push_back({fs[j].key, take[j]});
        if (fs[j].exp - take[j] > 0) right.push_back({fs[j].key, fs[j].exp - take[j]});
      }
      emit(PBWMonomial(std::move(left)), PBWMonomial(std::move(right)),
           field.from_rational(mpq_class(w)));
      return;
    }
    for (int a = 0; a <= fs[i].exp; ++a) {
      take[i] = a;
      rec(i + 1, w * binomial(fs[i].exp, a));
    }
  };
  rec(0, 1);
}

}  // namespace

Tensor2 Enveloping::delta0(const UElement& a) const {
  Tensor2 r;
  for (const auto& [m, c] : a) {
    split_monomial(m, field(), [&](PBWMonomial l, PBWMonomial rr, const Scalar& w) {
      r.add_term({std::move(l), std::move(rr)}, c * w);
    });
  }
  return r;
}

UElement Enveloping::s0(const UElement& a) const {
  UElement r;
  for (const auto& [m, c] : a) {
    UElement img = one();
    int sign = 1;
    const auto& fs = m.factors();
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
      img = times_generator_power(img, it->key, it->exp);
      if (it->exp % 2) sign = -sign;
    }
    r.add_scaled(img, c * field().from_int(sign));
  }
  return r;
}

Scalar Enveloping::epsilon0(const UElement& a) const {
  const Scalar* c = a.find(PBWMonomial());
  return c ? *c : field().zero();
}

Tensor3 Enveloping::delta0_left(const Tensor2& t) const {
  Tensor3 r;
  for (const auto& [k, c] : t) {
    split_monomial(k[0], field(), [&](PBWMonomial l, PBWMonomial rr, const Scalar& w) {
      r.add_term({std::move(l), std::move(rr), k[1]}, c * w);
    });
  }
  return r;
}

Tensor3 Enveloping::delta0_right(const Tensor2& t) const {
  Tensor3 r;
  for (const auto& [k, c] : t) {
    split_monomial(k[1], field(), [&](PBWMonomial l, PBWMonomial rr, const Scalar& w) {
      r.add_term({k[0], std::move(l), std::move(rr)}, c * w);
    });
  }
  return r;
}

Tensor3 Enveloping::pad_right(const Tensor2& t) const {
  Tensor3 r;
  for (const auto& [k, c] : t) r.add_term({k[0], k[1], PBWMonomial()}, c);
  return r;
}

Tensor3 Enveloping::pad_left(const Tensor2& t) const {
  Tensor3 r;
  for (const auto& [k, c] : t) r.add_term({PBWMonomial(), k[0], k[1]}, c);
  return r;
}

Tensor2 Enveloping::flip(const Tensor2& t) const {
  Tensor2 r;
  for (const auto& [k, c] : t) r.add_term({k[1], k[0]}, c);
  return r;
}

UElement Enveloping::multiply_with_antipode(const Tensor2& t, bool antipode_left) const {
  UElement r;
  for (const auto& [k, c] : t) {
    UElement l = UElement(k[0], field().one());
    UElement rr = UElement(k[1], field().one());
    if (antipode_left) {
      l = s0(l);
    } else {
      rr = s0(rr);
    }
    r.add_scaled(multiply(l, rr), c);
  }
  return r;
}

UElement Enveloping::contract(const Tensor2& t) const {
  UElement r;
  for (const auto& [k, c] : t) r.add_scaled(multiply_monomials(k[0], k[1]), c);
  return r;
}

UElement Enveloping::factorial_poly(const UElement& h, const Scalar& a, int m,
                                    FactorialKind kind) const {
  if (m < 0) throw std::invalid_argument("factorial polynomial needs m >= 0");
  // integer shifts may be written as rationals; carry them into F_p
  Scalar base = a.is_rational() && !field().is_rational() ? reduce_mod_p(a, field().p) : a;
  UElement r = one();
  for (int j = 0; j < m; ++j) {
    Scalar shift = base + field().from_int(kind == FactorialKind::Rising ? j : -j);
    r = multiply(r, h + scalar(shift));
  }
  return r;
}

UElement Enveloping::divided_ad_power(const UElement& e, const UElement& x, int l) const {
  UElement r = x;
  for (int i = 1; i <= l && !r.is_zero(); ++i) {
    r = commutator(e, r);
    r *= field().from_int(i).inverse();
  }
  return r;
}

std::string Enveloping::format(const PBWMonomial& m) const {
  if (m.is_unit()) return "1";
  std::string s;
  for (const auto& f : m.factors()) {
    if (!s.empty()) s += '*';
    s += basis_name(ctx_, f.key);
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s;
}

std::string Enveloping::format(const UElement& a) const {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : a.sorted()) {
    std::string cs = c.to_string();
    bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (m.is_unit()) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += format(m);
    }
    first = false;
  }
  return s;
}

mpz_class Enveloping::restricted_monomial_count() const {
  if (!restricted_) throw std::logic_error("monomial count is finite only in u(L)");
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), ctx_.p, modular_basis(ctx_.n, ctx_.p).size());
  return r;
}

std::vector<PBWMonomial> Enveloping::restricted_monomials() const {
  if (!restricted_) throw std::logic_error("monomial enumeration is finite only in u(L)");
  auto basis = modular_basis(ctx_.n, ctx_.p);
  std::vector<PBWMonomial> out;
  std::vector<int> exps(basis.size(), 0);
  while (true) {
    std::vector<PBWFactor> fs;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (exps[i] > 0) fs.push_back({basis[i], exps[i]});
    }
    out.emplace_back(std::move(fs));
    std::size_t i = 0;
    while (i < exps.size() && exps[i] == static_cast<int>(ctx_.p) - 1) exps[i++] = 0;
    if (i == exps.size()) break;
    ++exps[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cartanh
