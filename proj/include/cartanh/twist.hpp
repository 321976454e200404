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

#ifndef CARTANH_TWIST_HPP
#define CARTANH_TWIST_HPP

#include <stdexcept>
#include <string>

#include "cartanh/enveloping.hpp"
#include "cartanh/lie_h.hpp"
#include "cartanh/tpoly.hpp"

namespace cartanh {

enum class TwistVariant { CurlyF, F };

/// F_a-style series sum_r c_r h_a^{..r..} (x) e^r t^r for a fixed pair.
struct TwistElement {
  TwistPair pair;
  Scalar a;
  TwistVariant variant = TwistVariant::CurlyF;
  TPoly<Tensor2> body;
};

/// CurlyF: ((-1)^r / r!) h_a^{[r]} (x) e^r; F: (1/r!) h_a^{<r>} (x) e^r. Over F_p
/// the sum stops at r = p - 1.
TwistElement build_twist(const Enveloping& env, const TwistPair& pair, const Scalar& a,
                         TwistVariant variant, TMode mode);

struct TwistUnits {
  TPoly<UElement> u;  // m (S0 (x) Id)(F_a)
  TPoly<UElement> v;  // m (Id (x) S0)(CurlyF_a)
  TPoly<UElement> w;  // v_0
};

TwistUnits build_u_v(const Enveloping& env, const TwistPair& pair, const Scalar& a, TMode mode);

class NonCommutingTwists : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A twist together with its inverse; products of commuting twists stay here.
struct Twist {
  std::string label;
  TPoly<Tensor2> body;
  TPoly<Tensor2> inverse;

  /// CurlyF_0 with inverse F_0.
  static Twist basic(const Enveloping& env, const TwistPair& pair, TMode mode);
  /// f1 f2; throws NonCommutingTwists unless f1 f2 = f2 f1.
  static Twist product(const Enveloping& env, const Twist& f1, const Twist& f2);
  /// Degree-1 coefficient doubled; the inverse is left alone.
  Twist corrupted() const;

  TMode mode() const { return body.mode(); }
};

struct SeriesComparison {
  bool equal = true;
  int first_difference = -1;
  std::string witness;  // formatted degree-d difference when unequal
};

/// (F (x) 1)(Delta0 (x) Id)(F) against (1 (x) F)(Id (x) Delta0)(F).
SeriesComparison verify_cocycle(const Enveloping& env, const Twist& f);

TPoly<Tensor2> twist_coproduct(const Enveloping& env, const Twist& f, const UElement& x);
/// w = m(Id (x) S0)(F), w^{-1} = m(S0 (x) Id)(F^{-1}).
TPoly<UElement> twist_w(const Enveloping& env, const Twist& f);
TPoly<UElement> twist_w_inverse(const Enveloping& env, const Twist& f);
TPoly<UElement> twist_antipode(const Enveloping& env, const Twist& f, const UElement& x);

/// Coproducts of `probe` under two twists; differing degree or equal.
SeriesComparison distinctness_probe(const Enveloping& env, const Twist& f1, const Twist& f2,
                                    const UElement& probe);

// Series-level helpers shared with the closed-form checks.

/// Degreewise product in U, U(x)U or U(x)U(x)U.
template <class V>
TPoly<V> series_mul(const Enveloping& env, const TPoly<V>& a, const TPoly<V>& b) {
  return tpoly_mul(env, a, b);
}

/// (D (x) Id) and (Id (x) D) applied to a series of 2-tensors, where D is a
/// coproduct given degreewise on monomials as a series.
template <class D>
TPoly<Tensor3> apply_left(const Enveloping& env, const TPoly<Tensor2>& t, D delta) {
  TPoly<Tensor3> r(t.mode());
  for (int i = 0; i <= t.max_degree(); ++i) {
    for (const auto& [k, c] : t[i]) {
      TPoly<Tensor2> dk = delta(k[0]);
      for (int j = 0; j <= dk.max_degree(); ++j) {
        Tensor3 piece;
        for (const auto& [kk, cc] : dk[j]) piece.add_term({kk[0], kk[1], k[1]}, c * cc);
        r.add_at(i + j, piece);
      }
    }
  }
  (void)env;
  return r;
}

template <class D>
TPoly<Tensor3> apply_right(const Enveloping& env, const TPoly<Tensor2>& t, D delta) {
  TPoly<Tensor3> r(t.mode());
  for (int i = 0; i <= t.max_degree(); ++i) {
    for (const auto& [k, c] : t[i]) {
      TPoly<Tensor2> dk = delta(k[1]);
      for (int j = 0; j <= dk.max_degree(); ++j) {
        Tensor3 piece;
        for (const auto& [kk, cc] : dk[j]) piece.add_term({k[0], kk[0], kk[1]}, c * cc);
        r.add_at(i + j, piece);
      }
    }
  }
  (void)env;
  return r;
}

/// m (S (x) Id)(t) where S is an antipode given on monomials as a series.
template <class S>
TPoly<UElement> multiply_antipode_left(const Enveloping& env, const TPoly<Tensor2>& t, S antipode) {
  TPoly<UElement> r(t.mode());
  for (int i = 0; i <= t.max_degree(); ++i) {
    for (const auto& [k, c] : t[i]) {
      TPoly<UElement> sk = antipode(k[0]);
      TPoly<UElement> right = tpoly_constant(t.mode(), UElement(k[1], c));
      TPoly<UElement> prod = tpoly_mul(env, sk, right);
      for (int j = 0; j <= prod.max_degree(); ++j) r.add_at(i + j, prod[j]);
    }
  }
  return r;
}

/// (eps (x) Id)(t) and (Id (x) eps)(t).
TPoly<UElement> counit_left(const Enveloping& env, const TPoly<Tensor2>& t);
TPoly<UElement> counit_right(const Enveloping& env, const TPoly<Tensor2>& t);

}  // namespace cartanh

#endif  // CARTANH_TWIST_HPP
