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

#include "cartanh/lie_h_modular.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartanh {

namespace {

bool in_box(const MultiIndex& a, std::uint32_t p) {
  return a.is_nonnegative() && a.max_component() < static_cast<int>(p);
}

}  // namespace

DividedElement::DividedElement(int n, std::uint32_t p) : n_(n), p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("O(2n;1) needs a prime p");
}

DividedElement DividedElement::monomial(int n, std::uint32_t p, const MultiIndex& a) {
  DividedElement u(n, p);
  u.add_term(a, Scalar::modular(1, p));
  return u;
}

Scalar DividedElement::coeff(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Scalar::modular(0, p_) : it->second;
}

void DividedElement::add_term(const MultiIndex& a, const Scalar& c) {
  if (a.rank() != n_) throw std::invalid_argument("divided monomial rank mismatch");
  if (!in_box(a, p_) || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void DividedElement::check_same(const DividedElement& o) const {
  if (n_ != o.n_ || p_ != o.p_) throw ContextMismatch("divided power parameters differ");
}

DividedElement& DividedElement::operator+=(const DividedElement& o) {
  check_same(o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

DividedElement& DividedElement::operator-=(const DividedElement& o) {
  check_same(o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

bool operator==(const DividedElement& a, const DividedElement& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::string DividedElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [a, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += c.to_string() + "*x(" + a.to_string() + ")";
  }
  return s;
}

DividedElement divided_multiply(const DividedElement& a, const DividedElement& b) {
  if (a.rank() != b.rank() || a.prime() != b.prime()) {
    throw ContextMismatch("divided power parameters differ");
  }
  DividedElement r(a.rank(), a.prime());
  for (const auto& [x, cx] : a.terms()) {
    for (const auto& [y, cy] : b.terms()) {
      MultiIndex s = x + y;
      if (!in_box(s, a.prime())) continue;
      mpz_class w = multi_binomial(x, y);
      r.add_term(s, cx * cy * Scalar::modular(mpz_class(w % a.prime()).get_si(), a.prime()));
    }
  }
  return r;
}

DividedElement divided_partial(const DividedElement& u, int signed_pos) {
  DividedElement r(u.rank(), u.prime());
  MultiIndex unit = MultiIndex::unit(u.rank(), signed_pos);
  for (const auto& [a, c] : u.terms()) {
    if (a.at(signed_pos) == 0) continue;
    r.add_term(a - unit, c);
  }
  return r;
}

DividedElement poisson_divided(const DividedElement& u, const DividedElement& v) {
  if (u.rank() != v.rank() || u.prime() != v.prime()) {
    throw ContextMismatch("divided power parameters differ");
  }
  DividedElement r(u.rank(), u.prime());
  for (int i = 1; i <= u.rank(); ++i) {
    r += divided_multiply(divided_partial(u, -i), divided_partial(v, i));
    r -= divided_multiply(divided_partial(u, i), divided_partial(v, -i));
  }
  return r;
}

void modular_bracket_basis(int n, std::uint32_t p, const MultiIndex& a, const MultiIndex& b,
                           const std::function<void(const MultiIndex&, const Scalar&)>& emit) {
  DividedElement w = poisson_divided(DividedElement::monomial(n, p, a),
                                     DividedElement::monomial(n, p, b));
  for (const auto& [g, c] : w.terms()) {
    if (g.is_zero() || g.min_component() == static_cast<int>(p) - 1) continue;
    emit(g, c);
  }
}

LieElement modular_bracket(const LieElement& a, const LieElement& b) {
  if (!a.context().is_modular()) throw ContextMismatch("modular_bracket needs H(2n;1) elements");
  return bracket(a, b);
}

LieElement reduce_to_modular(const LieElement& x, std::uint32_t p) {
  if (x.context().variant != LieVariant::HPlus) {
    throw ContextMismatch("reduction is defined on the positive part H+");
  }
  LieContext target = LieContext::modular(x.context().n, p);
  LieElement r(target);
  for (const auto& [a, c] : x.terms()) {
    if (!target.admissible(a)) continue;
    Scalar weighted = c * Scalar::rational(mpq_class(multi_factorial(a)));
    r.add_term(a, reduce_mod_p(weighted, p));
  }
  return r;
}

std::vector<MultiIndex> modular_basis(int n, std::uint32_t p) {
  LieContext ctx = LieContext::modular(n, p);
  std::vector<MultiIndex> out;
  MultiIndex a(n);
  const int size = 2 * n;
  while (true) {
    if (ctx.admissible(a)) out.push_back(a);
    int i = 0;
    while (i < size && a[i] == static_cast<int>(p) - 1) {
      a.set_flat(i, 0);
      ++i;
    }
    if (i == size) break;
    a.set_flat(i, a[i] + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_toral(const MultiIndex& a) {
  for (int i = 1; i <= a.rank(); ++i) {
    if (a == MultiIndex::unit(a.rank(), i) + MultiIndex::unit(a.rank(), -i)) return true;
  }
  return false;
}

std::optional<MultiIndex> restriction(const MultiIndex& a) {
  if (is_toral(a)) return a;
  return std::nullopt;
}

}  // namespace cartanh
