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

#ifndef CARTANH_ENVELOPING_HPP
#define CARTANH_ENVELOPING_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cartanh/lie_h.hpp"

namespace cartanh {

struct PBWFactor {
  MultiIndex key;
  int exp = 1;
  friend bool operator==(const PBWFactor&, const PBWFactor&) = default;
};

/// Ordered monomial x_1^{e_1} ... x_k^{e_k} with x_1 < ... < x_k. The empty
/// monomial is the unit.
class PBWMonomial {
 public:
  PBWMonomial() = default;
  /// Throws std::invalid_argument unless keys strictly increase and exps >= 1.
  explicit PBWMonomial(std::vector<PBWFactor> factors);
  static PBWMonomial generator(const MultiIndex& key, int exp = 1);

  const std::vector<PBWFactor>& factors() const { return f_; }
  bool is_unit() const { return f_.empty(); }
  int degree() const;
  std::size_t length() const { return f_.size(); }
  const PBWFactor& back() const { return f_.back(); }

  PBWMonomial without_last() const;
  PBWMonomial appended(const MultiIndex& key, int exp) const;
  PBWMonomial with_last_exp(int exp) const;

  std::size_t hash() const { return hash_; }

  friend bool operator==(const PBWMonomial& a, const PBWMonomial& b) {
    return a.hash_ == b.hash_ && a.f_ == b.f_;
  }
  /// Filtration degree first, then factor-wise.
  friend std::strong_ordering operator<=>(const PBWMonomial& a, const PBWMonomial& b);

 private:
  void rehash();

  std::vector<PBWFactor> f_;
  std::size_t hash_ = 0;
};

struct PBWMonomialHash {
  std::size_t operator()(const PBWMonomial& m) const { return m.hash(); }
};

template <std::size_t K>
using TensorKey = std::array<PBWMonomial, K>;

template <std::size_t K>
struct TensorKeyHash {
  std::size_t operator()(const TensorKey<K>& t) const {
    std::size_t h = K;
    for (const auto& m : t) hash_combine(h, m.hash());
    return h;
  }
};

/// Sparse table key -> Scalar without stored zeros.
template <class Key, class Hash>
class Sparse {
 public:
  using Map = std::unordered_map<Key, Scalar, Hash>;

  Sparse() = default;
  Sparse(const Key& k, const Scalar& c) { add_term(k, c); }

  void add_term(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add_scaled(const Sparse& o, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [k, v] : o.terms_) add_term(k, v * c);
  }

  Sparse& operator+=(const Sparse& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  Sparse& operator-=(const Sparse& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  Sparse& operator*=(const Scalar& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [k, v] : terms_) v *= c;
    }
    return *this;
  }
  friend Sparse operator+(Sparse a, const Sparse& b) { return a += b; }
  friend Sparse operator-(Sparse a, const Sparse& b) { return a -= b; }
  friend Sparse operator*(const Scalar& c, Sparse a) { return a *= c; }
  Sparse operator-() const {
    Sparse r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Map& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  const Scalar* find(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? nullptr : &it->second;
  }

  std::vector<std::pair<Key, Scalar>> sorted() const {
    std::vector<std::pair<Key, Scalar>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  friend bool operator==(const Sparse& a, const Sparse& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [k, v] : a.terms_) {
      auto it = b.terms_.find(k);
      if (it == b.terms_.end() || !(it->second == v)) return false;
    }
    return true;
  }

 private:
  Map terms_;
};

using UElement = Sparse<PBWMonomial, PBWMonomialHash>;
template <std::size_t K>
using TensorElement = Sparse<TensorKey<K>, TensorKeyHash<K>>;
using Tensor2 = TensorElement<2>;
using Tensor3 = TensorElement<3>;

enum class FactorialKind { Rising, Falling };

/// PBW-normalized universal enveloping algebra of a Hamiltonian algebra, or
/// the restricted enveloping algebra u(H(2n;1)) when `restricted` is set.
///
/// Normal-ordering results are memoized; the cache is shared between copies
/// and safe for concurrent use.
class Enveloping {
 public:
  explicit Enveloping(LieContext ctx, bool restricted = false);

  const LieContext& context() const { return ctx_; }
  Field field() const { return ctx_.field(); }
  bool restricted() const { return restricted_; }

  UElement one() const;
  UElement scalar(const Scalar& c) const;
  UElement generator(const MultiIndex& key) const;
  UElement from_lie(const LieElement& x) const;
  /// Inverse of from_lie on linear elements; throws if x has nonlinear terms.
  LieElement to_lie(const UElement& x) const;

  UElement multiply(const UElement& a, const UElement& b) const;
  UElement multiply_monomials(const PBWMonomial& a, const PBWMonomial& b) const;
  UElement power(const UElement& a, int k) const;
  UElement commutator(const UElement& a, const UElement& b) const;

  template <std::size_t K>
  TensorElement<K> multiply(const TensorElement<K>& a, const TensorElement<K>& b) const;

  Tensor2 tensor(const UElement& a, const UElement& b) const;
  Tensor3 tensor(const UElement& a, const UElement& b, const UElement& c) const;

  Tensor2 delta0(const UElement& a) const;
  UElement s0(const UElement& a) const;
  Scalar epsilon0(const UElement& a) const;

  /// (Delta0 (x) Id) and (Id (x) Delta0) on 2-tensors.
  Tensor3 delta0_left(const Tensor2& t) const;
  Tensor3 delta0_right(const Tensor2& t) const;
  /// F (x) 1 and 1 (x) F.
  Tensor3 pad_right(const Tensor2& t) const;
  Tensor3 pad_left(const Tensor2& t) const;
  Tensor2 flip(const Tensor2& t) const;
  /// m(S0 (x) Id) when antipode_left, m(Id (x) S0) otherwise.
  UElement multiply_with_antipode(const Tensor2& t, bool antipode_left) const;
  /// Plain multiplication map A (x) A -> A.
  UElement contract(const Tensor2& t) const;
  /// Applies f to the j-th component of each term (f: PBWMonomial -> UElement).
  template <std::size_t K, class F>
  TensorElement<K> map_component(const TensorElement<K>& t, std::size_t j, F f) const;

  /// (h + a)(h + a + 1)...(h + a + m - 1) for Rising, (h + a)...(h + a - m + 1)
  /// for Falling; the empty product is 1.
  UElement factorial_poly(const UElement& h, const Scalar& a, int m, FactorialKind kind) const;

  /// (1/l!) (ad e)^l (x) computed by repeated commutators.
  UElement divided_ad_power(const UElement& e, const UElement& x, int l) const;

  std::string format(const PBWMonomial& m) const;
  std::string format(const UElement& a) const;
  template <std::size_t K>
  std::string format(const TensorElement<K>& t) const;

  /// Number of restricted PBW monomials: p^{dim L}.
  mpz_class restricted_monomial_count() const;
  /// Every restricted monomial, canonical order. Only for small algebras.
  std::vector<PBWMonomial> restricted_monomials() const;

 private:
  struct Caches;

  std::shared_ptr<const UElement> times_generator(const PBWMonomial& m, const MultiIndex& x) const;
  UElement times_generator_power(const UElement& u, const MultiIndex& x, int k) const;
  const std::vector<std::pair<MultiIndex, Scalar>>& lie_bracket(const MultiIndex& x,
                                                               const MultiIndex& y) const;
  Scalar integer(const mpz_class& v) const;

  LieContext ctx_;
  bool restricted_;
  std::shared_ptr<Caches> caches_;
};

template <std::size_t K>
TensorElement<K> Enveloping::multiply(const TensorElement<K>& a, const TensorElement<K>& b) const {
  TensorElement<K> r;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      std::array<UElement, K> parts;
      bool zero = false;
      for (std::size_t j = 0; j < K && !zero; ++j) {
        parts[j] = multiply_monomials(ka[j], kb[j]);
        zero = parts[j].is_zero();
      }
      if (zero) continue;
      Scalar c = ca * cb;
      if constexpr (K == 2) {
        for (const auto& [m0, c0] : parts[0])
          for (const auto& [m1, c1] : parts[1]) r.add_term({m0, m1}, c * c0 * c1);
      } else {
        for (const auto& [m0, c0] : parts[0])
          for (const auto& [m1, c1] : parts[1]) {
            Scalar c01 = c * c0 * c1;
            for (const auto& [m2, c2] : parts[2]) r.add_term({m0, m1, m2}, c01 * c2);
          }
      }
    }
  }
  return r;
}

template <std::size_t K, class F>
TensorElement<K> Enveloping::map_component(const TensorElement<K>& t, std::size_t j, F f) const {
  TensorElement<K> r;
  for (const auto& [k, c] : t) {
    UElement img = f(k[j]);
    for (const auto& [m, cm] : img) {
      TensorKey<K> nk = k;
      nk[j] = m;
      r.add_term(nk, c * cm);
    }
  }
  return r;
}

template <std::size_t K>
std::string Enveloping::format(const TensorElement<K>& t) const {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : t.sorted()) {
    std::string cs = c.to_string();
    bool neg = cs[0] == '-';
    if (neg) cs.erase(0, 1);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (cs != "1") s += cs + "*";
    for (std::size_t j = 0; j < K; ++j) {
      if (j) s += " (x) ";
      s += format(k[j]);
    }
    first = false;
  }
  return s;
}

}  // namespace cartanh

#endif  // CARTANH_ENVELOPING_HPP
