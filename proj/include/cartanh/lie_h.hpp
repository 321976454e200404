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

#ifndef CARTANH_LIE_H_HPP
#define CARTANH_LIE_H_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "cartanh/multi_index.hpp"
#include "cartanh/scalar.hpp"

namespace cartanh {

enum class LieVariant { FullH, HPlus, ModularH };

/// Which Hamiltonian algebra a LieElement lives in.
///
/// FullH: basis D_H(x^a), a in Z^{2n} \ {0}.  HPlus: a in N^{2n} \ {0}.
/// ModularH: divided-power basis D_H(x^{(a)}) of H(2n;1), 0 <= a <= tau,
/// a not in {0, tau}, over F_p.
struct LieContext {
  LieVariant variant = LieVariant::HPlus;
  int n = 1;
  std::uint32_t p = 0;

  static LieContext full(int n);
  static LieContext plus(int n);
  static LieContext modular(int n, std::uint32_t p);

  Field field() const { return Field{variant == LieVariant::ModularH ? p : 0}; }
  bool is_modular() const { return variant == LieVariant::ModularH; }
  bool admissible(const MultiIndex& a) const;
  std::string to_string() const;

  friend bool operator==(const LieContext&, const LieContext&) = default;
};

/// Sparse linear combination of Hamiltonian basis vectors. Never stores a
/// zero coefficient or an inadmissible key.
class LieElement {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  explicit LieElement(LieContext ctx) : ctx_(ctx) {}
  static LieElement basis(const LieContext& ctx, const MultiIndex& a);
  static LieElement basis(const LieContext& ctx, const MultiIndex& a, const Scalar& c);

  const LieContext& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const MultiIndex& a) const;

  /// Throws std::invalid_argument for an inadmissible key.
  void add_term(const MultiIndex& a, const Scalar& c);

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Scalar& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Scalar& c, LieElement a) { return a *= c; }
  LieElement operator-() const;

  friend bool operator==(const LieElement& a, const LieElement& b);

  /// "c*DH[..;..] + ..." in canonical key order; "0" for the zero element.
  std::string to_string() const;

 private:
  void check_context(const LieElement& o) const;

  LieContext ctx_;
  Terms terms_;
};

/// Visits the nonzero terms of [D_H(x^a), D_H(x^b)] in the given context.
void bracket_basis(const LieContext& ctx, const MultiIndex& a, const MultiIndex& b,
                   const std::function<void(const MultiIndex&, const Scalar&)>& emit);

/// Lie bracket; throws ContextMismatch when contexts differ.
LieElement bracket(const LieElement& a, const LieElement& b);

/// +1 for m < 0 and -1 for m > 0; m = 0 throws.
int sigma_sign(int m);
Scalar sigma(int m);

/// Canonical text of one basis vector: DH[..;..] or DHp[..;..]@p.
std::string basis_name(const LieContext& ctx, const MultiIndex& a);

/// Parses a single basis token as produced by basis_name(). The context of a
/// DH token is HPlus when all components are nonnegative, FullH otherwise.
std::pair<LieContext, MultiIndex> parse_basis(const std::string& token);

/// A distinguished pair with [h, e] = e.
struct TwistPair {
  enum class Kind { Vertical, Horizontal, Generic };

  Kind kind = Kind::Generic;
  int k = 0;
  int m = 0;
  LieElement h;
  LieElement e;

  /// h = D_H(x^{e_k + e_-k}); e = D_H(x^{2e_k + e_-k}) in characteristic 0,
  /// e = 2 D_H(x^{(2e_k + e_-k)}) in H(2n;1).
  static TwistPair vertical(const LieContext& ctx, int k);
  /// h as above, e = D_H(x^{e_k + e_m}); needs n >= 2 and m not in {0, +-k}.
  static TwistPair horizontal(const LieContext& ctx, int k, int m);
  static TwistPair generic(LieElement h, LieElement e);

  std::string describe() const;

 private:
  TwistPair(Kind kind, int k, int m, LieElement h, LieElement e);
};

/// Formal 2-tensor over the Lie algebra.
struct LieTensor {
  std::map<std::pair<MultiIndex, MultiIndex>, Scalar> terms;

  void add_term(const MultiIndex& a, const MultiIndex& b, const Scalar& c);
  LieTensor flip() const;
  LieTensor& operator+=(const LieTensor& o);
  bool is_zero() const { return terms.empty(); }
  friend bool operator==(const LieTensor&, const LieTensor&);
};

/// Classical r-matrix h (x) e - e (x) h.
LieTensor r_matrix(const TwistPair& pair);

}  // namespace cartanh

#endif  // CARTANH_LIE_H_HPP
