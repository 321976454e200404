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

#ifndef CARTANH_COEFFICIENTS_HPP
#define CARTANH_COEFFICIENTS_HPP

#include <cstdint>
#include <utility>

#include "cartanh/lie_h.hpp"

namespace cartanh {

/// (1/l!) prod_{j<l} (a_k - 2 a_-k + j); A_0 = 1, A_{-1} = 0.
Scalar coeff_A_vertical(const MultiIndex& a, int k, int l);

/// l! C(a_k + l, a_k) A_l mod p, and 0 when a + l e_k leaves the basis set.
Scalar coeff_Abar_vertical(const MultiIndex& a, int k, int l, std::uint32_t p);

/// Sign convention for A_j. Corrected carries the (-1)^j forced by the
/// first-order bracket; AsPrinted drops it.
enum class ASign { Corrected, AsPrinted };

struct HorizontalOptions {
  ASign a_sign = ASign::Corrected;
  /// Replace sigma(m) by -sigma(m) (negative control).
  bool flip_sigma = false;
};

/// (A_j, B_j): A_j = (-1)^j C(a_-k, j), B_j = sigma(m)^j C(a_-m, j).
std::pair<Scalar, Scalar> coeff_AB_horizontal(const MultiIndex& a, int k, int m, int j,
                                              HorizontalOptions opt = {});

/// Lower index of the binomial in B-bar.
enum class BbarIndex { Proof, StatementAsPrinted };

/// (A-bar_j, B-bar_{l-j}) over F_p:
///   A-bar_j = (-1)^j C(a_m + j, j) for j <= a_-k, else 0;
///   B-bar_{l-j} = sigma(m)^{l-j} C(a_k + l - j, l - j) for l - j <= a_-m, else 0.
/// StatementAsPrinted uses C(a_k + l - j, j) in B-bar.
std::pair<Scalar, Scalar> coeff_ABbar_horizontal(const MultiIndex& a, int k, int m, int j, int l,
                                                 std::uint32_t p, BbarIndex idx = BbarIndex::Proof,
                                                 HorizontalOptions opt = {});

/// prod_{j=0}^{i} (j a_k - (j-1) a_-k), and 1 for i < 0.
Scalar coeff_A_ik(const MultiIndex& a, int i, int k);

/// Exponent shifts of the horizontal d^{(l)} terms:
/// a + (l-j)(e_k - e_-m) + j(e_m - e_-k).
MultiIndex horizontal_target(const MultiIndex& a, int k, int m, int j, int l);

}  // namespace cartanh

#endif  // CARTANH_COEFFICIENTS_HPP
