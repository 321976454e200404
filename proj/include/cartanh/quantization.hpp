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

#ifndef CARTANH_QUANTIZATION_HPP
#define CARTANH_QUANTIZATION_HPP

#include <memory>
#include <stdexcept>
#include <string>

#include "cartanh/coefficients.hpp"
#include "cartanh/enveloping.hpp"
#include "cartanh/lie_h.hpp"
#include "cartanh/tpoly.hpp"

namespace cartanh {

enum class QVariant {
  Char0Vertical,
  Char0Horizontal,
  ModularUtVertical,
  ModularUtqVertical,
  ModularUtHorizontal,
  ModularUtqHorizontal,
  JordanianSp2n,
};

std::string to_string(QVariant v);
/// Accepts the CLI spellings: char0-vertical, utq-horizontal, jordanian, ...
QVariant parse_variant(const std::string& s);

class InvalidContext : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InadmissibleElement : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct QuantizationContext {
  QVariant variant = QVariant::Char0Vertical;
  int n = 1;
  int k = 1;
  int m = 0;  // horizontal partner index
  std::uint32_t p = 0;
  long q = 0;
  int N = 4;  // t-truncation for the char-0 and U_t variants

  /// Throws InvalidContext on bad parameter combinations.
  void validate() const;

  bool horizontal() const;
  bool modular() const { return variant != QVariant::Char0Vertical && variant != QVariant::Char0Horizontal; }
  bool restricted() const;
  LieContext lie_context() const;
  TMode mode() const;
  std::string to_string() const;
};

/// Deliberate departures used to exhibit misprinted variants of the formulas.
struct FormulaOptions {
  HorizontalOptions horizontal;
  BbarIndex bbar = BbarIndex::Proof;
  /// Extra h_1^{<l>} factor on the right of d^{(l)}(x) in the modular Delta.
  bool stray_h1_in_delta = false;
  /// (-1)^l inside the horizontal antipode sum.
  bool signed_antipode = false;
};

/// The closed-form Hopf structure of one quantization, on basis elements and
/// extended multiplicatively to the enveloping algebra.
class Quantization {
 public:
  explicit Quantization(QuantizationContext ctx, FormulaOptions opt = {});

  const QuantizationContext& context() const { return ctx_; }
  const Enveloping& env() const { return env_; }
  const TwistPair& pair() const { return pair_; }
  TMode mode() const { return ctx_.mode(); }
  UElement h() const { return env_.from_lie(pair_.h); }
  UElement e() const { return env_.from_lie(pair_.e); }

  /// Throws InadmissibleElement unless a is a basis index of the variant.
  void check_admissible(const MultiIndex& a) const;

  /// d^{(l)}(D_H(x^a)) from the coefficient families.
  LieElement d_ell(const MultiIndex& a, int l) const;
  /// (1/l!) (ad e)^l D_H(x^a) by repeated brackets.
  LieElement d_ell_oracle(const MultiIndex& a, int l) const;

  TPoly<Tensor2> delta(const MultiIndex& a) const;
  TPoly<UElement> antipode(const MultiIndex& a) const;
  Scalar counit(const MultiIndex& a) const;

  TPoly<Tensor2> delta(const LieElement& x) const;
  TPoly<UElement> antipode(const LieElement& x) const;

  /// Algebra-map extension of Delta and anti-algebra-map extension of S.
  TPoly<Tensor2> delta(const UElement& x) const;
  TPoly<UElement> antipode(const UElement& x) const;
  TPoly<Tensor2> delta_monomial(const PBWMonomial& m) const;
  TPoly<UElement> antipode_monomial(const PBWMonomial& m) const;

  TPoly<Tensor3> delta_left(const TPoly<Tensor2>& t) const;
  TPoly<Tensor3> delta_right(const TPoly<Tensor2>& t) const;
  /// m (S (x) Id) and m (Id (x) S).
  TPoly<UElement> antipode_left(const TPoly<Tensor2>& t) const;
  TPoly<UElement> antipode_right(const TPoly<Tensor2>& t) const;

  /// (1 - et)^s in the variant's t-ring.
  TPoly<UElement> one_minus_et(int s) const;
  TPoly<UElement> constant(const UElement& x) const { return tpoly_constant(mode(), x); }
  /// Highest l entering the closed-form sums.
  int max_ell() const;

 private:
  struct Cache;

  QuantizationContext ctx_;
  FormulaOptions opt_;
  Enveloping env_;
  TwistPair pair_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace cartanh

#endif  // CARTANH_QUANTIZATION_HPP
