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

#ifndef CARTANH_TPOLY_HPP
#define CARTANH_TPOLY_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "cartanh/enveloping.hpp"

namespace cartanh {

/// Either Q-style series cut at t^N, or K[t]/(t^p - q t).
struct TMode {
  enum class Kind { Char0Truncated, PTruncated };
  Kind kind = Kind::Char0Truncated;
  int N = 0;
  std::uint32_t p = 0;
  long q = 0;

  static TMode truncated(int N) { return {Kind::Char0Truncated, N, 0, 0}; }
  /// Throws std::invalid_argument unless p is a prime >= 2.
  static TMode p_truncated(std::uint32_t p, long q);

  bool is_p_truncated() const { return kind == Kind::PTruncated; }
  int max_degree() const { return is_p_truncated() ? static_cast<int>(p) - 1 : N; }
  std::string to_string() const;

  friend bool operator==(const TMode&, const TMode&) = default;
};

class ModeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Coefficient sequence in t over a value space V (Scalar, UElement or a
/// tensor element). Stored degrees run 0..mode.max_degree().
template <class V>
class TPoly {
 public:
  TPoly() = default;
  /// `zero` seeds every coefficient (needed for Scalar over F_p).
  explicit TPoly(TMode mode, const V& zero = V())
      : mode_(mode), c_(static_cast<std::size_t>(mode.max_degree()) + 1, zero) {}

  const TMode& mode() const { return mode_; }
  int max_degree() const { return mode_.max_degree(); }
  const V& operator[](int d) const { return c_[static_cast<std::size_t>(d)]; }
  V& at(int d) { return c_[static_cast<std::size_t>(d)]; }

  /// Adds v * t^d, folding t^p = q t or dropping degrees beyond N.
  void add_at(int d, const V& v) {
    if (mode_.is_p_truncated()) {
      int p = static_cast<int>(mode_.p);
      if (d >= p) {
        if (mode_.q == 0) return;
        V w = v;
        if (mode_.q != 1) w *= Scalar::modular(mode_.q, mode_.p);
        add_at(d - p + 1, w);
        return;
      }
    } else if (d > mode_.N) {
      return;
    }
    c_[static_cast<std::size_t>(d)] += v;
  }

  bool is_zero() const {
    for (const auto& v : c_)
      if (!v.is_zero()) return false;
    return true;
  }

  /// Lowest degree where the two series differ, or -1.
  int first_difference(const TPoly& o) const {
    check(o);
    for (int d = 0; d <= max_degree(); ++d)
      if (!(c_[d] == o.c_[d])) return d;
    return -1;
  }

  TPoly& operator+=(const TPoly& o) {
    check(o);
    for (std::size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
    return *this;
  }
  TPoly& operator-=(const TPoly& o) {
    check(o);
    for (std::size_t d = 0; d < c_.size(); ++d) c_[d] -= o.c_[d];
    return *this;
  }
  TPoly& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.first_difference(b) < 0; }

  void check(const TPoly& o) const {
    if (!(mode_ == o.mode_)) throw ModeMismatch("t-modes differ: " + mode_.to_string() + " vs " + o.mode_.to_string());
  }

  /// Same coefficients cut at a smaller truncation order.
  TPoly retruncate(int N) const {
    if (mode_.is_p_truncated() || N > mode_.N) throw ModeMismatch("retruncate needs a smaller char-0 order");
    TPoly r(TMode::truncated(N));
    for (int d = 0; d <= N; ++d) r.c_[d] = c_[d];
    return r;
  }

  template <class F>
  auto map(F f) const -> TPoly<decltype(f(std::declval<const V&>()))> {
    TPoly<decltype(f(std::declval<const V&>()))> r(mode_);
    for (int d = 0; d <= max_degree(); ++d) r.at(d) = f(c_[d]);
    return r;
  }

 private:
  TMode mode_;
  std::vector<V> c_;
};

template <class R, class V>
R zero_like(const V& x) {
  if constexpr (std::is_same_v<R, Scalar> && std::is_same_v<V, Scalar>) {
    return x.field().zero();
  } else {
    return R();
  }
}

/// Product with a caller-supplied coefficient multiplication.
template <class A, class B, class Mul>
auto tpoly_mul(const TPoly<A>& a, const TPoly<B>& b, Mul mul) -> TPoly<decltype(mul(a[0], b[0]))> {
  if (!(a.mode() == b.mode())) throw ModeMismatch("t-modes differ in product");
  using R = decltype(mul(a[0], b[0]));
  TPoly<R> r(a.mode(), zero_like<R>(a[0]));
  for (int i = 0; i <= a.max_degree(); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j <= b.max_degree(); ++j) {
      if (b[j].is_zero()) continue;
      if (!a.mode().is_p_truncated() && i + j > a.max_degree()) break;
      r.add_at(i + j, mul(a[i], b[j]));
    }
  }
  return r;
}

/// Product of U-valued or tensor-valued series in one algebra.
template <class V>
TPoly<V> tpoly_mul(const Enveloping& env, const TPoly<V>& a, const TPoly<V>& b) {
  return tpoly_mul(a, b, [&](const V& x, const V& y) { return env.multiply(x, y); });
}

/// x as a constant series.
template <class V>
TPoly<V> tpoly_constant(TMode mode, const V& x) {
  TPoly<V> r(mode);
  r.at(0) = x;
  return r;
}

/// (1 - e t)^s for any integer s.
TPoly<UElement> one_minus_et_power(const Enveloping& env, const UElement& e, int s, TMode mode);

/// Substitutes t = value (for PTruncated, value should be a root of t^p - q t).
template <class V>
V evaluate_at(const TPoly<V>& a, const Scalar& value) {
  V r = a[0];
  Scalar pw = value.field().one();
  for (int d = 1; d <= a.max_degree(); ++d) {
    pw *= value;
    V term = a[d];
    term *= pw;
    r += term;
  }
  return r;
}

/// 1 (x) x and x (x) 1 lifted degreewise.
TPoly<Tensor2> tensor_left_one(const Enveloping& env, const TPoly<UElement>& x);
TPoly<Tensor2> tensor_right_one(const Enveloping& env, const TPoly<UElement>& x);

template <class V>
std::string format_tpoly(const Enveloping& env, const TPoly<V>& a) {
  std::string s;
  for (int d = 0; d <= a.max_degree(); ++d) {
    if (a[d].is_zero()) continue;
    if (!s.empty()) s += "\n";
    s += "t^" + std::to_string(d) + ": " + env.format(a[d]);
  }
  return s.empty() ? "0" : s;
}

}  // namespace cartanh

#endif  // CARTANH_TPOLY_HPP
