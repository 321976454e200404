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

#include "cartanh/coefficients.hpp"

#include "cartanh/lie_h_modular.hpp"

namespace cartanh {

namespace {

mpq_class binom_q(long a, long b) {
  if (b < 0) return 0;
  // generalized C(a, b) = a(a-1)...(a-b+1)/b! for any integer a
  mpz_class num = 1;
  for (long i = 0; i < b; ++i) num *= (a - i);
  return mpq_class(num, factorial(static_cast<unsigned>(b)));
}

int sigma_of(int m, const HorizontalOptions& opt) {
  int s = sigma_sign(m);
  return opt.flip_sigma ? -s : s;
}

}  // namespace

Scalar coeff_A_vertical(const MultiIndex& a, int k, int l) {
  if (l < 0) return Scalar(0);
  long base = a.at(k) - 2L * a.at(-k);
  mpz_class num = 1;
  for (long j = 0; j < l; ++j) num *= base + j;
  return Scalar::rational(mpq_class(num, factorial(static_cast<unsigned>(l))));
}

Scalar coeff_Abar_vertical(const MultiIndex& a, int k, int l, std::uint32_t p) {
  Field f{p};
  if (l < 0) return f.zero();
  MultiIndex target = a;
  target.set(k, a.at(k) + l);
  if (!LieContext::modular(a.rank(), p).admissible(target)) return f.zero();
  mpq_class v = coeff_A_vertical(a, k, l).as_rational() * mpq_class(factorial(static_cast<unsigned>(l))) *
                mpq_class(binomial(a.at(k) + l, a.at(k)));
  return f.from_rational(v);
}

std::pair<Scalar, Scalar> coeff_AB_horizontal(const MultiIndex& a, int k, int m, int j,
                                              HorizontalOptions opt) {
  mpq_class A = binom_q(a.at(-k), j);
  if (opt.a_sign == ASign::Corrected && j % 2) A = -A;
  mpq_class B = binom_q(a.at(-m), j);
  if (j % 2 && sigma_of(m, opt) < 0) B = -B;
  return {Scalar::rational(A), Scalar::rational(B)};
}

std::pair<Scalar, Scalar> coeff_ABbar_horizontal(const MultiIndex& a, int k, int m, int j, int l,
                                                 std::uint32_t p, BbarIndex idx,
                                                 HorizontalOptions opt) {
  Field f{p};
  Scalar A = f.zero(), B = f.zero();
  if (j >= 0 && j <= a.at(-k)) {
    mpq_class v = binomial(a.at(m) + j, j);
    if (opt.a_sign == ASign::Corrected && j % 2) v = -v;
    A = f.from_rational(v);
  }
  int r = l - j;
  if (r >= 0 && r <= a.at(-m)) {
    int lower = idx == BbarIndex::Proof ? r : j;
    mpq_class v = binomial(a.at(k) + r, lower);
    if (r % 2 && sigma_of(m, opt) < 0) v = -v;
    B = f.from_rational(v);
  }
  return {A, B};
}

Scalar coeff_A_ik(const MultiIndex& a, int i, int k) {
  mpz_class v = 1;
  for (long j = 0; j <= i; ++j) v *= j * a.at(k) - (j - 1) * a.at(-k);
  return Scalar::rational(mpq_class(v));
}

MultiIndex horizontal_target(const MultiIndex& a, int k, int m, int j, int l) {
  MultiIndex t = a;
  int r = l - j;
  t.set(k, t.at(k) + r);
  t.set(-m, t.at(-m) - r);
  t.set(m, t.at(m) + j);
  t.set(-k, t.at(-k) - j);
  return t;
}

}  // namespace cartanh
