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

#include "cartanh/lie_h.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "cartanh/lie_h_modular.hpp"

namespace cartanh {

LieContext LieContext::full(int n) { return {LieVariant::FullH, n, 0}; }
LieContext LieContext::plus(int n) { return {LieVariant::HPlus, n, 0}; }

LieContext LieContext::modular(int n, std::uint32_t p) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("H(2n;1) needs a prime p >= 3");
  return {LieVariant::ModularH, n, p};
}

bool LieContext::admissible(const MultiIndex& a) const {
  if (a.rank() != n || a.is_zero()) return false;
  switch (variant) {
    case LieVariant::FullH:
      return true;
    case LieVariant::HPlus:
      return a.is_nonnegative();
    case LieVariant::ModularH:
      return a.is_nonnegative() && a.max_component() < static_cast<int>(p) &&
             !(a.min_component() == static_cast<int>(p) - 1);
  }
  return false;
}

std::string LieContext::to_string() const {
  switch (variant) {
    case LieVariant::FullH:
      return "H(n=" + std::to_string(n) + ")";
    case LieVariant::HPlus:
      return "H+(n=" + std::to_string(n) + ")";
    case LieVariant::ModularH:
      return "H(" + std::to_string(2 * n) + ";1) over F_" + std::to_string(p);
  }
  return {};
}

LieElement LieElement::basis(const LieContext& ctx, const MultiIndex& a) {
  return basis(ctx, a, ctx.field().one());
}

LieElement LieElement::basis(const LieContext& ctx, const MultiIndex& a, const Scalar& c) {
  LieElement x(ctx);
  x.add_term(a, c);
  return x;
}

Scalar LieElement::coeff(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? ctx_.field().zero() : it->second;
}

void LieElement::add_term(const MultiIndex& a, const Scalar& c) {
  if (!ctx_.admissible(a)) {
    throw std::invalid_argument("index " + a.to_string() + " is not a basis index of " +
                                ctx_.to_string());
  }
  if (c.prime() != ctx_.field().p) {
    throw ContextMismatch("coefficient field does not match " + ctx_.to_string());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LieElement::check_context(const LieElement& o) const {
  if (!(ctx_ == o.ctx_)) {
    throw ContextMismatch("Lie contexts differ: " + ctx_.to_string() + " vs " +
                          o.ctx_.to_string());
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_context(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_context(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, v] : terms_) v *= c;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  for (auto& [a, v] : r.terms_) v = -v;
  return r;
}

bool operator==(const LieElement& a, const LieElement& b) {
  a.check_context(b);
  return a.terms_ == b.terms_;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    if (cs != "1") s += cs + "*";
    s += basis_name(ctx_, a);
    first = false;
  }
  return s;
}

void bracket_basis(const LieContext& ctx, const MultiIndex& a, const MultiIndex& b,
                   const std::function<void(const MultiIndex&, const Scalar&)>& emit) {
  if (ctx.is_modular()) {
    modular_bracket_basis(ctx.n, ctx.p, a, b, emit);
    return;
  }
  for (int i = 1; i <= ctx.n; ++i) {
    long c = static_cast<long>(a.at(-i)) * b.at(i) - static_cast<long>(a.at(i)) * b.at(-i);
    if (c == 0) continue;
    MultiIndex g = a + b;
    g.set(i, g.at(i) - 1);
    g.set(-i, g.at(-i) - 1);
    if (g.is_zero()) continue;
    emit(g, Scalar::rational(c));
  }
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (!(a.context() == b.context())) {
    throw ContextMismatch("bracket across contexts: " + a.context().to_string() + " vs " +
                          b.context().to_string());
  }
  LieElement r(a.context());
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      Scalar c = cx * cy;
      bracket_basis(a.context(), x, y, [&](const MultiIndex& g, const Scalar& v) {
        r.add_term(g, c * v);
      });
    }
  }
  return r;
}

int sigma_sign(int m) {
  if (m == 0) throw std::invalid_argument("sigma(0) is undefined");
  return m < 0 ? 1 : -1;
}

Scalar sigma(int m) { return Scalar(sigma_sign(m)); }

std::string basis_name(const LieContext& ctx, const MultiIndex& a) {
  if (ctx.is_modular()) return "DHp[" + a.to_string() + "]@" + std::to_string(ctx.p);
  return "DH[" + a.to_string() + "]";
}

std::pair<LieContext, MultiIndex> parse_basis(const std::string& token) {
  std::string t;
  std::copy_if(token.begin(), token.end(), std::back_inserter(t),
               [](unsigned char ch) { return !std::isspace(ch); });
  bool modular = t.rfind("DHp[", 0) == 0;
  if (!modular && t.rfind("DH[", 0) != 0) {
    throw std::invalid_argument("basis token must start with DH[ or DHp[: " + token);
  }
  auto open = t.find('[');
  auto close = t.find(']');
  if (close == std::string::npos) throw std::invalid_argument("missing ']' in " + token);
  MultiIndex a = MultiIndex::parse(std::string_view(t).substr(open + 1, close - open - 1));
  std::string rest = t.substr(close + 1);
  if (modular) {
    if (rest.size() < 2 || rest[0] != '@') throw std::invalid_argument("DHp needs @p in " + token);
    std::size_t used = 0;
    unsigned long p = std::stoul(rest.substr(1), &used);
    if (used + 1 != rest.size()) throw std::invalid_argument("trailing text in " + token);
    return {LieContext::modular(a.rank(), static_cast<std::uint32_t>(p)), a};
  }
  if (!rest.empty()) throw std::invalid_argument("trailing text in " + token);
  return {a.is_nonnegative() ? LieContext::plus(a.rank()) : LieContext::full(a.rank()), a};
}

TwistPair::TwistPair(Kind kind, int k, int m, LieElement h, LieElement e)
    : kind(kind), k(k), m(m), h(std::move(h)), e(std::move(e)) {
  if (!(bracket(this->h, this->e) == this->e)) {
    throw std::invalid_argument("pair does not satisfy [h, e] = e");
  }
}

TwistPair TwistPair::vertical(const LieContext& ctx, int k) {
  if (k < 1 || k > ctx.n) throw std::invalid_argument("vertical pair needs 1 <= k <= n");
  MultiIndex hk = MultiIndex::unit(ctx.n, k) + MultiIndex::unit(ctx.n, -k);
  MultiIndex ek = hk + MultiIndex::unit(ctx.n, k);
  Scalar two = ctx.field().from_int(ctx.is_modular() ? 2 : 1);
  return TwistPair(Kind::Vertical, k, 0, LieElement::basis(ctx, hk),
                   LieElement::basis(ctx, ek, two));
}

TwistPair TwistPair::horizontal(const LieContext& ctx, int k, int m) {
  if (ctx.n < 2) throw std::invalid_argument("horizontal pair needs n >= 2");
  if (k < 1 || k > ctx.n || m == 0 || m > ctx.n || m < -ctx.n || m == k || m == -k) {
    throw std::invalid_argument("horizontal pair needs 1 <= k, |m| <= n and m != +-k");
  }
  MultiIndex hk = MultiIndex::unit(ctx.n, k) + MultiIndex::unit(ctx.n, -k);
  MultiIndex em = MultiIndex::unit(ctx.n, k) + MultiIndex::unit(ctx.n, m);
  return TwistPair(Kind::Horizontal, k, m, LieElement::basis(ctx, hk),
                   LieElement::basis(ctx, em));
}

TwistPair TwistPair::generic(LieElement h, LieElement e) {
  return TwistPair(Kind::Generic, 0, 0, std::move(h), std::move(e));
}

std::string TwistPair::describe() const {
  switch (kind) {
    case Kind::Vertical:
      return "vertical(k=" + std::to_string(k) + ")";
    case Kind::Horizontal:
      return "horizontal(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
    case Kind::Generic:
      return "generic(h=" + h.to_string() + ",e=" + e.to_string() + ")";
  }
  return {};
}

void LieTensor::add_term(const MultiIndex& a, const MultiIndex& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

LieTensor LieTensor::flip() const {
  LieTensor r;
  for (const auto& [ab, c] : terms) r.add_term(ab.second, ab.first, c);
  return r;
}

LieTensor& LieTensor::operator+=(const LieTensor& o) {
  for (const auto& [ab, c] : o.terms) add_term(ab.first, ab.second, c);
  return *this;
}

bool operator==(const LieTensor& a, const LieTensor& b) { return a.terms == b.terms; }

LieTensor r_matrix(const TwistPair& pair) {
  LieTensor r;
  for (const auto& [x, cx] : pair.h.terms()) {
    for (const auto& [y, cy] : pair.e.terms()) {
      r.add_term(x, y, cx * cy);
      r.add_term(y, x, -(cx * cy));
    }
  }
  return r;
}

}  // namespace cartanh
