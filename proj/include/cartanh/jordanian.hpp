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

#ifndef CARTANH_JORDANIAN_HPP
#define CARTANH_JORDANIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cartanh/lie_h.hpp"

namespace cartanh {

/// Square matrix with rows and columns indexed by -n..-1, 1..n.
class SignedMatrix {
 public:
  SignedMatrix(int n, Field field);
  static SignedMatrix unit(int n, Field field, int i, int j);

  int rank() const { return n_; }
  const Field& field() const { return field_; }
  const Scalar& at(int i, int j) const { return v_[slot(i, j)]; }
  void add(int i, int j, const Scalar& c);

  SignedMatrix& operator+=(const SignedMatrix& o);
  SignedMatrix& operator-=(const SignedMatrix& o);
  friend SignedMatrix operator+(SignedMatrix a, const SignedMatrix& b) { return a += b; }
  friend SignedMatrix operator-(SignedMatrix a, const SignedMatrix& b) { return a -= b; }
  friend SignedMatrix operator*(const Scalar& c, SignedMatrix a);
  friend SignedMatrix operator*(const SignedMatrix& a, const SignedMatrix& b);
  friend bool operator==(const SignedMatrix& a, const SignedMatrix& b);

  bool is_zero() const;
  /// "E[1,-2] - E[-2,-1]" style sum of matrix units.
  std::string to_string() const;

 private:
  std::size_t slot(int i, int j) const;

  int n_;
  Field field_;
  std::vector<Scalar> v_;
};

SignedMatrix commutator(const SignedMatrix& a, const SignedMatrix& b);

/// D_H(x^{(e_r + e_s)}) -> sigma(s) E_{r,-s} + sigma(r) E_{s,-r} and
/// D_H(x^{(2 e_r)}) -> sigma(r) E_{r,-r}. Throws InadmissibleElement on
/// terms outside the degree-0 part.
SignedMatrix sp2n_map(const LieElement& x);

/// Inverse of sp2n_map; throws std::invalid_argument if m is not in the image.
LieElement sp2n_inverse(const LieContext& ctx, const SignedMatrix& m);

struct TableRow {
  std::string label;
  bool match = false;
  std::string witness;  // first differing t-degree and the difference
};

/// The ten stored coproduct rows of the sp_4 Jordanian example, each compared
/// with the closed-form coproduct of (k, m) = (1, -2) in u_{t,q}(H(4;1)_0).
std::vector<TableRow> jordanian_sp4_table(std::uint32_t p, long q);

/// Degree-0 basis indices |a| = 2 of H(2n;1).
std::vector<MultiIndex> degree_zero_basis(int n);

}  // namespace cartanh

#endif  // CARTANH_JORDANIAN_HPP
