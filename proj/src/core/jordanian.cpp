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

#include "cartanh/jordanian.hpp"

#include <algorithm>
#include <stdexcept>

#include "cartanh/quantization.hpp"
#include "cartanh/tpoly.hpp"

namespace cartanh {

SignedMatrix::SignedMatrix(int n, Field field)
    : n_(n), field_(field), v_(static_cast<std::size_t>(4 * n * n), field.zero()) {}

SignedMatrix SignedMatrix::unit(int n, Field field, int i, int j) {
  SignedMatrix m(n, field);
  m.add(i, j, field.one());
  return m;
}

std::size_t SignedMatrix::slot(int i, int j) const {
  auto pos = [this](int s) {
    if (s == 0 || s < -n_ || s > n_) throw std::out_of_range("matrix index " + std::to_string(s));
    return s < 0 ? s + n_ : s + n_ - 1;
  };
  return static_cast<std::size_t>(pos(i) * 2 * n_ + pos(j));
}

void SignedMatrix::add(int i, int j, const Scalar& c) { v_[slot(i, j)] += c; }

SignedMatrix& SignedMatrix::operator+=(const SignedMatrix& o) {
  for (std::size_t s = 0; s < v_.size(); ++s) v_[s] += o.v_[s];
  return *this;
}

SignedMatrix& SignedMatrix::operator-=(const SignedMatrix& o) {
  for (std::size_t s = 0; s < v_.size(); ++s) v_[s] -= o.v_[s];
  return *this;
}

SignedMatrix operator*(const Scalar& c, SignedMatrix a) {
  for (auto& x : a.v_) x *= c;
  return a;
}

namespace {

std::vector<int> signed_range(int n) {
  std::vector<int> r;
  for (int i = -n; i <= n; ++i)
    if (i) r.push_back(i);
  return r;
}

}  // namespace

SignedMatrix operator*(const SignedMatrix& a, const SignedMatrix& b) {
  SignedMatrix r(a.n_, a.field_);
  auto idx = signed_range(a.n_);
  for (int i : idx)
    for (int l : idx) {
      const Scalar& x = a.at(i, l);
      if (x.is_zero()) continue;
      for (int j : idx) r.add(i, j, x * b.at(l, j));
    }
  return r;
}

bool operator==(const SignedMatrix& a, const SignedMatrix& b) {
  return a.n_ == b.n_ && a.v_ == b.v_;
}

bool SignedMatrix::is_zero() const {
  for (const auto& x : v_)
    if (!x.is_zero()) return false;
  return true;
}

std::string SignedMatrix::to_string() const {
  std::string s;
  for (int i : signed_range(n_))
    for (int j : signed_range(n_)) {
      const Scalar& c = at(i, j);
      if (c.is_zero()) continue;
      std::string cs = c.to_string();
      bool neg = cs[0] == '-';
      if (neg) cs.erase(0, 1);
      s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
      if (cs != "1") s += cs + "*";
      s += "E[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
  return s.empty() ? "0" : s;
}

SignedMatrix commutator(const SignedMatrix& a, const SignedMatrix& b) { return a * b - b * a; }

namespace {

// The one or two signed positions carrying a degree-2 index.
std::pair<int, int> support(const MultiIndex& a) {
  int r = 0, s = 0;
  for (int i = -a.rank(); i <= a.rank(); ++i) {
    if (!i) continue;
    int v = a.at(i);
    if (v == 2) return {i, i};
    if (v == 1) (r ? s : r) = i;
  }
  return {r, s};
}

}  // namespace

SignedMatrix sp2n_map(const LieElement& x) {
  const LieContext& ctx = x.context();
  const int n = ctx.n;
  Field f = ctx.field();
  SignedMatrix out(n, f);
  for (const auto& [a, c] : x.terms()) {
    if (a.degree() != 2 || !a.is_nonnegative())
      throw InadmissibleElement(basis_name(ctx, a) + " is not in the degree-0 part");
    auto [r, s] = support(a);
    if (r == s) {
      out.add(r, -r, c * f.from_int(sigma_sign(r)));
    } else {
      out.add(r, -s, c * f.from_int(sigma_sign(s)));
      out.add(s, -r, c * f.from_int(sigma_sign(r)));
    }
  }
  return out;
}

LieElement sp2n_inverse(const LieContext& ctx, const SignedMatrix& m) {
  LieElement x(ctx);
  for (const auto& a : degree_zero_basis(ctx.n)) {
    auto [r, s] = support(a);
    // sigma(+-1) is its own inverse
    Field f = ctx.field();
    Scalar c = r == s ? m.at(r, -r) * f.from_int(sigma_sign(r)) : m.at(r, -s) * f.from_int(sigma_sign(s));
    x.add_term(a, c);
  }
  if (!(sp2n_map(x) == m)) throw std::invalid_argument("matrix is not in sp_2n: " + m.to_string());
  return x;
}

std::vector<MultiIndex> degree_zero_basis(int n) {
  std::vector<MultiIndex> out;
  for (int i = -n; i <= n; ++i) {
    if (!i) continue;
    for (int j = i; j <= n; ++j) {
      if (!j) continue;
      MultiIndex a(n);
      a.set(i, a.at(i) + 1);
      a.set(j, a.at(j) + 1);
      out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cartanh

namespace cartanh {

namespace {

struct Sp4Rows {
  const Quantization& Q;
  const Enveloping& env;
  Field f;

  SignedMatrix E(int i, int j) const { return SignedMatrix::unit(2, f, i, j); }
  UElement u(const SignedMatrix& m) const { return env.from_lie(sp2n_inverse(env.context(), m)); }
  TPoly<Tensor2> tensor(const UElement& a, const TPoly<UElement>& s) const {
    return s.map([&](const UElement& v) { return env.tensor(a, v); });
  }
  TPoly<UElement> times(const TPoly<UElement>& s, const UElement& x) const {
    return tpoly_mul(env, s, Q.constant(x));
  }
  TPoly<UElement> shift(const TPoly<UElement>& s, int d) const {
    TPoly<UElement> r(s.mode());
    for (int i = 0; i <= s.max_degree(); ++i)
      if (!s[i].is_zero()) r.add_at(i + d, s[i]);
    return r;
  }
};

}  // namespace

std::vector<TableRow> jordanian_sp4_table(std::uint32_t p, long q) {
  QuantizationContext ctx;
  ctx.variant = QVariant::JordanianSp2n;
  ctx.n = 2;
  ctx.k = 1;
  ctx.m = -2;
  ctx.p = p;
  ctx.q = q;
  Quantization Q(ctx);
  const Enveloping& env = Q.env();
  Sp4Rows R{Q, env, env.field()};

  const UElement one = env.one();
  const UElement h = R.u(R.E(1, 1) - R.E(-1, -1));
  const UElement hp = R.u(R.E(2, 2) - R.E(-2, -2));
  const UElement e = R.u(R.E(1, 2) - R.E(-2, -1));
  const UElement h2 = env.factorial_poly(h, env.field().zero(), 2, FactorialKind::Rising);
  const TPoly<UElement> c1 = Q.constant(one);
  const TPoly<UElement> f = Q.one_minus_et(-1), f2 = Q.one_minus_et(-2);
  const TPoly<UElement> fi = Q.one_minus_et(1), fi2 = Q.one_minus_et(2);
  const Scalar two = env.field().from_int(2);

  auto prim = [&](const UElement& x, const TPoly<UElement>& right) {
    return R.tensor(x, right) + R.tensor(one, Q.constant(x));
  };

  struct Row {
    std::string label;
    SignedMatrix x;
    TPoly<Tensor2> expect;
  };
  std::vector<Row> rows;
  auto add = [&](std::string label, SignedMatrix x, TPoly<Tensor2> expect) {
    rows.push_back({std::move(label), std::move(x), std::move(expect)});
  };

  add("h", R.E(1, 1) - R.E(-1, -1), R.tensor(one, Q.constant(h)) + R.tensor(h, c1 - f));
  add("h'", R.E(2, 2) - R.E(-2, -2),
      R.tensor(hp, c1) + R.tensor(one, Q.constant(hp)) - R.tensor(h, f));
  add("e", R.E(1, 2) - R.E(-2, -1), R.tensor(one, Q.constant(e)) + R.tensor(e, fi) - R.tensor(h, f));
  {
    SignedMatrix x = R.E(1, -2) + R.E(2, -1);
    TPoly<Tensor2> t = R.tensor(h, R.shift(R.times(f, R.u(R.E(1, -1))), 1));
    t *= two;
    add("E[1,-2]+E[2,-1]", x, prim(R.u(x), fi) - t);
  }
  {
    SignedMatrix x = R.E(-1, 2) + R.E(-2, 1);
    TPoly<Tensor2> t = R.tensor(h, R.shift(R.times(f, R.u(R.E(-2, 2))), 1));
    t *= two;
    add("E[-1,2]+E[-2,1]", x, prim(R.u(x), f) - t);
  }
  // E[-1,-2] + E[2,1] lies outside the image; its right side is built on
  // the nearest image element E[2,1] - E[-1,-2] and the row is flagged below
  const SignedMatrix row6 = R.E(-1, -2) + R.E(2, 1);
  const SignedMatrix row6_fixed = R.E(2, 1) - R.E(-1, -2);
  add("E[-1,-2]+E[2,1]", row6,
      prim(R.u(row6_fixed), f) - R.tensor(h, R.shift(R.times(f, h - hp), 1)) -
          R.tensor(h2, R.shift(R.times(f2, e), 2)));
  add("E[1,-1]", R.E(1, -1), prim(R.u(R.E(1, -1)), fi2));
  {
    SignedMatrix x = R.E(2, -2);
    add("E[2,-2]", x,
        prim(R.u(x), c1) - R.tensor(h, R.shift(R.times(f, R.u(R.E(1, -2) + R.E(2, -1))), 1)) +
            R.tensor(h2, R.shift(R.times(f2, R.u(R.E(1, -1))), 2)));
  }
  {
    SignedMatrix x = R.E(-1, 1);
    add("E[-1,1]", x,
        prim(R.u(x), f2) + R.tensor(h, R.shift(R.times(f, R.u(R.E(-1, 2) + R.E(-2, 1))), 1)) +
            R.tensor(h2, R.shift(R.times(f2, R.u(R.E(-2, 2))), 2)));
  }
  add("E[-2,2]", R.E(-2, 2), prim(R.u(R.E(-2, 2)), c1));

  std::vector<TableRow> out;
  auto compare = [&](const TPoly<Tensor2>& got, const TPoly<Tensor2>& expect) {
    int d = got.first_difference(expect);
    if (d < 0) return std::string();
    Tensor2 diff = got[d];
    diff -= expect[d];
    return "t^" + std::to_string(d) + ": computed - stored = " + env.format(diff);
  };
  for (const auto& row : rows) {
    TableRow r{"Delta(" + row.label + ")", false, ""};
    try {
      r.witness = compare(Q.delta(sp2n_inverse(env.context(), row.x)), row.expect);
      r.match = r.witness.empty();
    } catch (const std::invalid_argument&) {
      std::string alt = compare(Q.delta(sp2n_inverse(env.context(), row6_fixed)), row.expect);
      r.witness = row.label + " is not in sp_4 under the sigma identification; reading it as " +
                  row6_fixed.to_string() + (alt.empty() ? " the row matches" : " still differs, " + alt);
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cartanh
