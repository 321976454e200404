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

#include "cartanh/tpoly.hpp"

namespace cartanh {

TMode TMode::p_truncated(std::uint32_t p, long q) {
  if (!is_prime(p)) throw std::invalid_argument("t^p - qt needs a prime p, got " + std::to_string(p));
  long r = q % static_cast<long>(p);
  if (r < 0) r += p;
  return {Kind::PTruncated, 0, p, r};
}

std::string TMode::to_string() const {
  if (is_p_truncated()) return "K[t]/(t^" + std::to_string(p) + " - " + std::to_string(q) + "t)";
  return "mod t^" + std::to_string(N + 1);
}

TPoly<UElement> one_minus_et_power(const Enveloping& env, const UElement& e, int s, TMode mode) {
  Field k = env.field();
  if (s >= 0) {
    TPoly<UElement> r(mode);
    UElement er = env.one();
    for (int j = 0; j <= s; ++j) {
      if (j > 0) er = env.multiply(er, e);
      if (er.is_zero()) break;
      if (!mode.is_p_truncated() && j > mode.N) break;
      mpz_class b = binomial(s, j);
      UElement term = er;
      term *= k.from_rational(mpq_class(j % 2 ? -b : b));
      r.add_at(j, term);
    }
    return r;
  }
  if (!mode.is_p_truncated()) {
    // generalized binomial series sum_r C(-s+r-1, r) e^r t^r
    TPoly<UElement> r(mode);
    UElement er = env.one();
    for (int j = 0; j <= mode.N; ++j) {
      if (j > 0) er = env.multiply(er, e);
      if (er.is_zero()) break;
      UElement term = er;
      term *= k.from_rational(mpq_class(binomial(-s + j - 1, j)));
      r.add_at(j, term);
    }
    return r;
  }
  // K[t]/(t^p - qt): the inverse of (1 - et) is the geometric sum up to e^{p-1}
  TPoly<UElement> g(mode);
  UElement er = env.one();
  for (int j = 0; j < static_cast<int>(mode.p); ++j) {
    if (j > 0) er = env.multiply(er, e);
    g.add_at(j, er);
  }
  TPoly<UElement> r = tpoly_constant(mode, env.one());
  for (int i = 0; i < -s; ++i) r = tpoly_mul(env, r, g);
  return r;
}

TPoly<Tensor2> tensor_left_one(const Enveloping& env, const TPoly<UElement>& x) {
  return x.map([&](const UElement& v) { return env.tensor(env.one(), v); });
}

TPoly<Tensor2> tensor_right_one(const Enveloping& env, const TPoly<UElement>& x) {
  return x.map([&](const UElement& v) { return env.tensor(v, env.one()); });
}

}  // namespace cartanh
