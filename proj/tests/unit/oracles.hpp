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

// Test-only reference implementations. None of these call into the library's
// bracket, reduction or PBW code; they are the independent side of each
// cross-check.

#ifndef CARTANH_TESTS_ORACLES_HPP
#define CARTANH_TESTS_ORACLES_HPP

#include <map>
#include <vector>

#include <gmpxx.h>

#include "cartanh/multi_index.hpp"

namespace oracle {

using cartanh::MultiIndex;

using LaurentPoly = std::map<MultiIndex, mpq_class>;

inline void add_to(LaurentPoly& f, const MultiIndex& a, const mpq_class& c) {
  if (c == 0) return;
  auto& v = f[a];
  v += c;
  if (v == 0) f.erase(a);
}

inline LaurentPoly partial(const LaurentPoly& f, int signed_pos) {
  LaurentPoly r;
  for (const auto& [a, c] : f) {
    int e = a.at(signed_pos);
    if (e == 0) continue;
    MultiIndex b = a;
    b.set(signed_pos, e - 1);
    add_to(r, b, c * e);
  }
  return r;
}

inline LaurentPoly times(const LaurentPoly& f, const LaurentPoly& g) {
  LaurentPoly r;
  for (const auto& [a, c] : f)
    for (const auto& [b, d] : g) add_to(r, a + b, c * d);
  return r;
}

/// Poisson bracket of Laurent monomials x^a, x^b, returned as the Hamiltonian
/// potential with the constant term removed (D_H kills constants).
inline LaurentPoly poisson_laurent(const MultiIndex& a, const MultiIndex& b) {
  LaurentPoly u{{a, 1}}, v{{b, 1}}, r;
  for (int i = 1; i <= a.rank(); ++i) {
    for (const auto& [g, c] : times(partial(u, -i), partial(v, i))) add_to(r, g, c);
    for (const auto& [g, c] : times(partial(u, i), partial(v, -i))) add_to(r, g, -c);
  }
  r.erase(MultiIndex(a.rank()));
  return r;
}

/// Elements of O(2n;1) with residues stored as long in [0, p).
using DividedPoly = std::map<MultiIndex, long>;

inline long binom_small(long a, long b) {
  if (b < 0 || b > a) return 0;
  long r = 1;
  for (long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

inline void add_mod(DividedPoly& f, const MultiIndex& a, long c, long p) {
  if (!a.is_nonnegative() || a.max_component() >= p) return;
  long& v = f[a];
  v = ((v + c) % p + p) % p;
  if (v == 0) f.erase(a);
}

inline DividedPoly divided_times(const DividedPoly& f, const DividedPoly& g, long p) {
  DividedPoly r;
  for (const auto& [a, c] : f) {
    for (const auto& [b, d] : g) {
      long w = 1;
      for (int i = 0; i < a.size(); ++i) w = w * binom_small(a[i] + b[i], a[i]) % p;
      add_mod(r, a + b, c * d % p * w, p);
    }
  }
  return r;
}

inline DividedPoly divided_d(const DividedPoly& f, int signed_pos, long p) {
  DividedPoly r;
  for (const auto& [a, c] : f) {
    if (a.at(signed_pos) == 0) continue;
    add_mod(r, a - MultiIndex::unit(a.rank(), signed_pos), c, p);
  }
  return r;
}

/// D_H(x^{(h)}) = sum_i (x^{(h - e_-i)} D_i - x^{(h - e_i)} D_-i) applied to f.
inline DividedPoly hamiltonian_apply(const MultiIndex& h, const DividedPoly& f, long p) {
  DividedPoly r;
  const int n = h.rank();
  for (int i = 1; i <= n; ++i) {
    DividedPoly ci, cmi;
    add_mod(ci, h - MultiIndex::unit(n, -i), 1, p);
    add_mod(cmi, h - MultiIndex::unit(n, i), 1, p);
    for (const auto& [g, c] : divided_times(ci, divided_d(f, i, p), p)) add_mod(r, g, c, p);
    for (const auto& [g, c] : divided_times(cmi, divided_d(f, -i, p), p)) add_mod(r, g, -c, p);
  }
  return r;
}

/// All monomials x^{(g)}, 0 <= g <= tau.
inline std::vector<MultiIndex> divided_monomials(int n, long p) {
  std::vector<MultiIndex> out;
  MultiIndex a(n);
  while (true) {
    out.push_back(a);
    int i = 0;
    while (i < 2 * n && a[i] == p - 1) a.set_flat(i++, 0);
    if (i == 2 * n) break;
    a.set_flat(i, a[i] + 1);
  }
  return out;
}

}  // namespace oracle

#endif  // CARTANH_TESTS_ORACLES_HPP
