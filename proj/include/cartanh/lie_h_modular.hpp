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

#ifndef CARTANH_LIE_H_MODULAR_HPP
#define CARTANH_LIE_H_MODULAR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartanh/lie_h.hpp"

namespace cartanh {

/// Element of the restricted divided power algebra O(2n;1) over F_p.
/// Keys satisfy 0 <= a <= tau componentwise.
class DividedElement {
 public:
  using Terms = std::map<MultiIndex, Scalar>;

  DividedElement(int n, std::uint32_t p);
  static DividedElement monomial(int n, std::uint32_t p, const MultiIndex& a);

  int rank() const { return n_; }
  std::uint32_t prime() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const MultiIndex& a) const;

  /// Keys outside [0, tau] contribute nothing (x^{(a)} = 0 there).
  void add_term(const MultiIndex& a, const Scalar& c);

  DividedElement& operator+=(const DividedElement& o);
  DividedElement& operator-=(const DividedElement& o);
  friend DividedElement operator+(DividedElement a, const DividedElement& b) { return a += b; }
  friend DividedElement operator-(DividedElement a, const DividedElement& b) { return a -= b; }
  friend bool operator==(const DividedElement& a, const DividedElement& b);

  std::string to_string() const;

 private:
  void check_same(const DividedElement& o) const;

  int n_;
  std::uint32_t p_;
  Terms terms_;
};

/// x^{(a)} x^{(b)} = C(a+b, a) x^{(a+b)}, zero once a component reaches p.
DividedElement divided_multiply(const DividedElement& a, const DividedElement& b);

/// D_j x^{(a)} = x^{(a - e_j)} for signed position j.
DividedElement divided_partial(const DividedElement& u, int signed_pos);

/// {u, v} = sum_i (D_{-i}u D_i v - D_i u D_{-i} v).
DividedElement poisson_divided(const DividedElement& u, const DividedElement& v);

/// Bracket in H(2n;1); tau-indexed and zero-indexed terms are dropped.
LieElement modular_bracket(const LieElement& a, const LieElement& b);

/// Basis-level bracket used by the generic dispatcher.
void modular_bracket_basis(int n, std::uint32_t p, const MultiIndex& a, const MultiIndex& b,
                           const std::function<void(const MultiIndex&, const Scalar&)>& emit);

/// D_H(x^a) -> a! D_H(x^{(a)}) mod p; zero when a leaves the basis set.
/// Throws ReductionUndefined when a coefficient cannot be reduced.
LieElement reduce_to_modular(const LieElement& x, std::uint32_t p);

/// The index set {0 <= a <= tau} \ {0, tau} in canonical order.
std::vector<MultiIndex> modular_basis(int n, std::uint32_t p);

/// a = e_i + e_-i for some i.
bool is_toral(const MultiIndex& a);

/// Restriction value x^{[p]} of a basis vector: the vector itself when toral,
/// nullopt (zero) otherwise.
std::optional<MultiIndex> restriction(const MultiIndex& a);

}  // namespace cartanh

#endif  // CARTANH_LIE_H_MODULAR_HPP
