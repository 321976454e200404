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


// Verification suites. Each check compares two independently computed sides:
// closed forms against twist conjugation, coefficient families against
// repeated brackets, reductions against the modular formulas.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "cartanh/coefficients.hpp"
#include "cartanh/jordanian.hpp"
#include "cartanh/lie_h_modular.hpp"
#include "cartanh/quantization.hpp"
#include "cartanh/twist.hpp"
#include "cartanh/verify.hpp"

namespace cartanh {

namespace {

using json = nlohmann::json;

std::string clip(std::string s) {
  constexpr std::size_t kMax = 600;
  if (s.size() > kMax) {
    s.resize(kMax);
    s += " ...";
  }
  return s;
}

CheckOutcome verdict(std::string witness) {
  if (witness.empty()) return {};
  return {CheckStatus::Fail, clip(std::move(witness))};
}

// A negative control passes when the corrupted side is rejected.
CheckOutcome control(const std::string& rejection, const std::string& what) {
  if (rejection.empty()) return {CheckStatus::Fail, what + " was not rejected"};
  return {CheckStatus::Pass, clip("rejected: " + rejection)};
}

template <class V>
std::string series_diff(const Enveloping& env, const TPoly<V>& got, const TPoly<V>& want) {
  int d = got.first_difference(want);
  if (d < 0) return {};
  V diff = got[d];
  diff -= want[d];
  return "t^" + std::to_string(d) + ": computed - expected = " + env.format(diff);
}

std::string lie_diff(const LieElement& got, const LieElement& want) {
  if (got == want) return {};
  return "computed " + got.to_string() + ", expected " + want.to_string();
}

std::string at_index(const MultiIndex& a) { return "[" + a.to_string() + "]"; }

// Evaluated once, on first use, from whichever worker gets there first.
template <class T>
class Lazy {
 public:
  explicit Lazy(std::function<T()> f) : f_(std::move(f)) {}
  const T& get() const {
    std::call_once(once_, [&] { value_ = std::make_unique<T>(f_()); });
    return *value_;
  }

 private:
  std::function<T()> f_;
  mutable std::once_flag once_;
  mutable std::unique_ptr<T> value_;
};

template <class T>
std::shared_ptr<Lazy<T>> lazy(std::function<T()> f) {
  return std::make_shared<Lazy<T>>(std::move(f));
}

QuantizationContext make_context(QVariant v, int n, int k, int m, std::uint32_t p, long q, int N) {
  QuantizationContext c{v, n, k, m, p, q, N};
  c.validate();
  return c;
}

std::shared_ptr<Lazy<Quantization>> lazy_quantization(QuantizationContext c, FormulaOptions o = {}) {
  return lazy<Quantization>([c, o] { return Quantization(c, o); });
}

// Nonzero a in N^{2n} with |a| <= maxdeg.
std::vector<MultiIndex> plus_basis(int n, int maxdeg) {
  std::vector<MultiIndex> out;
  MultiIndex a(n);
  for (;;) {
    if (!a.is_zero() && a.degree() <= maxdeg) out.push_back(a);
    int j = 0;
    while (j < 2 * n && a[j] == maxdeg) a.set_flat(j++, 0);
    if (j == 2 * n) break;
    a.set_flat(j, a[j] + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> sample(const std::vector<MultiIndex>& pool, std::size_t count, std::mt19937_64& rng) {
  if (pool.size() <= count) return pool;
  std::vector<MultiIndex> out;
  std::sample(pool.begin(), pool.end(), std::back_inserter(out), count, rng);
  return out;
}

// Random nonzero indices with components in [0, top].
std::vector<MultiIndex> random_indices(int n, int top, std::size_t count, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> comp(0, top);
  std::vector<MultiIndex> out;
  while (out.size() < count) {
    MultiIndex a(n);
    for (int j = 0; j < 2 * n; ++j) a.set_flat(j, comp(rng));
    if (!a.is_zero()) out.push_back(a);
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq s{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                  static_cast<std::uint32_t>(salt)};
  std::uint64_t v[1];
  std::uint32_t w[2];
  s.generate(w, w + 2);
  v[0] = (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
  return v[0];
}

// d^{(l)} from the coefficient families against repeated brackets.
std::string oracle_mismatch(const Quantization& Q, const std::vector<MultiIndex>& alphas, int max_l) {
  for (const auto& a : alphas) {
    for (int l = 0; l <= max_l; ++l) {
      std::string w = lie_diff(Q.d_ell(a, l), Q.d_ell_oracle(a, l));
      if (!w.empty()) return "alpha=" + at_index(a) + " l=" + std::to_string(l) + ": " + w;
    }
  }
  return {};
}

json base_params(const QuantizationContext& c) {
  json j = {{"variant", to_string(c.variant)}, {"n", c.n}, {"k", c.k}};
  if (c.horizontal()) j["m"] = c.m;
  if (c.modular()) j["p"] = c.p;
  if (c.restricted()) {
    j["q"] = c.q;
  } else {
    j["N"] = c.N;
  }
  return j;
}

// ---------------------------------------------------------------------------
// cocycle

void suite_cocycle(const SuiteConfig& cfg, std::vector<Check>& out) {
  struct Cell {
    bool horizontal;
    int n, k, m, N;
  };
  std::vector<Cell> cells;
  const bool custom = cfg.n || cfg.k || cfg.m || cfg.N;
  if (custom) {
    const bool hz = cfg.m.has_value();
    Cell c{hz, cfg.n.value_or(hz ? 2 : 1), cfg.k.value_or(1), cfg.m.value_or(0), cfg.N.value_or(hz ? 4 : 5)};
    make_context(hz ? QVariant::Char0Horizontal : QVariant::Char0Vertical, c.n, c.k, c.m, 0, 0, c.N);
    cells.push_back(c);
  } else {
    cells = {{false, 1, 1, 0, 5}, {false, 2, 1, 0, 5}, {true, 2, 1, 2, 4}};
  }

  for (const Cell& c : cells) {
    json params = {{"n", c.n}, {"k", c.k}, {"N", c.N}};
    if (c.horizontal) params["m"] = c.m;
    std::string ctx = std::string(c.horizontal ? "horizontal" : "vertical") + " twist in U(H+)[[t]] n=" +
                      std::to_string(c.n);
    auto twist = lazy<std::pair<Enveloping, Twist>>([c] {
      Enveloping env(LieContext::plus(c.n));
      TwistPair pair = c.horizontal ? TwistPair::horizontal(env.context(), c.k, c.m)
                                    : TwistPair::vertical(env.context(), c.k);
      Twist f = Twist::basic(env, pair, TMode::truncated(c.N));
      return std::make_pair(std::move(env), std::move(f));
    });
    out.push_back({std::string("cocycle/") + (c.horizontal ? "horizontal" : "vertical"), ctx, params, [twist] {
                     const auto& [env, f] = twist->get();
                     return verdict(verify_cocycle(env, f).witness);
                   }});
    if (c.n == 1 || custom) {
      out.push_back({"cocycle/control-corrupted-twist", ctx, params, [twist] {
                       const auto& [env, f] = twist->get();
                       SeriesComparison r = verify_cocycle(env, f.corrupted());
                       std::string rej = r.equal ? "" : "t^" + std::to_string(r.first_difference);
                       return control(rej, "corrupted twist");
                     }});
    }
  }

  // Shift identities between the two twist families
  const int gn = cfg.n.value_or(1), gk = cfg.k.value_or(1);
  make_context(QVariant::Char0Vertical, gn, gk, 0, 0, 0, 6);
  auto genv = lazy<Enveloping>([gn] { return Enveloping(LieContext::plus(gn)); });
  for (int a = -1; a <= 2; ++a) {
    for (int b = -1; b <= 2; ++b) {
      json params = {{"n", gn}, {"k", gk}, {"N", 6}, {"a", a}, {"b", b}};
      out.push_back({"cocycle/twist-shift-grid", "vertical twist family in U(H+)[[t]] n=" + std::to_string(gn),
                     params, [genv, gk, a, b] {
                       const Enveloping& env = genv->get();
                       TMode mode = TMode::truncated(6);
                       TwistPair pair = TwistPair::vertical(env.context(), gk);
                       UElement e = env.from_lie(pair.e);
                       auto fa = build_twist(env, pair, Scalar(a), TwistVariant::CurlyF, mode);
                       auto fb = build_twist(env, pair, Scalar(b), TwistVariant::F, mode);
                       std::string w = series_diff(env, tpoly_mul(env, fa.body, fb.body),
                                                   tensor_left_one(env, one_minus_et_power(env, e, a - b, mode)));
                       if (!w.empty()) return verdict("CurlyF_a F_b: " + w);
                       auto va = build_u_v(env, pair, Scalar(a), mode).v;
                       auto ub = build_u_v(env, pair, Scalar(b), mode).u;
                       w = series_diff(env, tpoly_mul(env, va, ub), one_minus_et_power(env, e, -(a + b), mode));
                       return verdict(w.empty() ? w : "v_a u_b: " + w);
                     }});
    }
  }

  out.push_back({"cocycle/product-twist-distinctness", "vertical twists k=1 and k=1,2 in U(H+)[[t]] n=2",
                 json{{"n", 2}, {"N", 3}, {"probe", "DH[0,1;0,1]"}}, [] {
                   Enveloping env(LieContext::plus(2));
                   TMode mode = TMode::truncated(3);
                   Twist f1 = Twist::basic(env, TwistPair::vertical(env.context(), 1), mode);
                   Twist f2 = Twist::basic(env, TwistPair::vertical(env.context(), 2), mode);
                   Twist f12 = Twist::product(env, f1, f2);
                   SeriesComparison c = distinctness_probe(env, f1, f12, env.generator(MultiIndex(2, {0, 1, 0, 1})));
                   if (c.equal) return verdict("coproducts agree through t^3");
                   if (c.first_difference != 1)
                     return verdict("first difference at t^" + std::to_string(c.first_difference) + ", not t^1");
                   return CheckOutcome{};
                 }});
}

// ---------------------------------------------------------------------------
// char0-closed-forms

void suite_char0(const SuiteConfig& cfg, std::vector<Check>& out) {
  struct Cell {
    int n, k, N, maxdeg;
  };
  std::vector<Cell> cells;
  if (cfg.n || cfg.k || cfg.N) {
    int n = cfg.n.value_or(1);
    cells.push_back({n, cfg.k.value_or(1), cfg.N.value_or(4), n == 1 ? 4 : 2});
  } else {
    cells = {{1, 1, 4, 4}, {2, 1, 3, 2}};
  }
  for (const Cell& c : cells) {
    QuantizationContext qc = make_context(QVariant::Char0Vertical, c.n, c.k, 0, 0, 0, c.N);
    auto Q = lazy_quantization(qc);
    auto F = lazy<Twist>([Q] { return Twist::basic(Q->get().env(), Q->get().pair(), Q->get().mode()); });
    auto W = lazy<std::pair<TPoly<UElement>, TPoly<UElement>>>([Q, F] {
      const Enveloping& env = Q->get().env();
      return std::make_pair(twist_w(env, F->get()), twist_w_inverse(env, F->get()));
    });
    for (const MultiIndex& a : plus_basis(c.n, c.maxdeg)) {
      json params = base_params(qc);
      params["alpha"] = a.to_string();
      const std::string ctx = qc.to_string();
      out.push_back({"char0-closed-forms/delta", ctx, params, [Q, F, a] {
                       const Quantization& q = Q->get();
                       return verdict(series_diff(q.env(), q.delta(a), twist_coproduct(q.env(), F->get(), q.env().generator(a))));
                     }});
      out.push_back({"char0-closed-forms/antipode", ctx, params, [Q, W, a] {
                       const Quantization& q = Q->get();
                       const Enveloping& env = q.env();
                       const auto& [w, wi] = W->get();
                       auto conj = series_mul(env, series_mul(env, w, q.constant(env.s0(env.generator(a)))), wi);
                       return verdict(series_diff(env, q.antipode(a), conj));
                     }});
      out.push_back({"char0-closed-forms/counit", ctx, params, [Q, a] {
                       Scalar c = Q->get().counit(a);
                       return verdict(c.is_zero() ? "" : "counit " + c.to_string());
                     }});
      out.push_back({"char0-closed-forms/t0-specialization", ctx, params, [Q, a] {
                       const Quantization& q = Q->get();
                       const Enveloping& env = q.env();
                       UElement x = env.generator(a);
                       if (!(q.delta(a)[0] == env.delta0(x))) return verdict("Delta at t=0 differs from Delta0");
                       if (!(q.antipode(a)[0] == env.s0(x))) return verdict("S at t=0 differs from S0");
                       return CheckOutcome{};
                     }});
    }
  }
}

// ---------------------------------------------------------------------------
// modular-reduction

// Char-0 PBW element pushed into U(H(2n;1)) through D_H(x^a) -> a! D_H(x^{(a)}).
UElement reduce_element(const Enveloping& target, const UElement& x) {
  const std::uint32_t p = target.context().p;
  UElement r;
  for (const auto& [m, c] : x) {
    UElement term = target.scalar(reduce_mod_p(c, p));
    for (const auto& f : m.factors()) {
      LieElement g = reduce_to_modular(LieElement::basis(LieContext::plus(f.key.rank()), f.key), p);
      term = target.multiply(term, target.power(target.from_lie(g), f.exp));
      if (term.is_zero()) break;
    }
    r += term;
  }
  return r;
}

Tensor2 reduce_tensor(const Enveloping& target, const Tensor2& t) {
  Tensor2 r;
  const std::uint32_t p = target.context().p;
  for (const auto& [key, c] : t) {
    UElement a = reduce_element(target, UElement(key[0], Scalar(1)));
    UElement b = reduce_element(target, UElement(key[1], Scalar(1)));
    Tensor2 piece = target.tensor(a, b);
    r.add_scaled(piece, reduce_mod_p(c, p));
  }
  return r;
}

void suite_reduction(const SuiteConfig& cfg, std::vector<Check>& out) {
  const int n = cfg.n.value_or(1), k = cfg.k.value_or(1);
  std::vector<std::uint32_t> primes = cfg.p ? std::vector<std::uint32_t>{*cfg.p} : std::vector<std::uint32_t>{3, 5};
  for (std::uint32_t p : primes) {
    const int N = static_cast<int>(p) - 1;
    QuantizationContext c0 = make_context(QVariant::Char0Vertical, n, k, 0, 0, 0, N);
    QuantizationContext cp = make_context(QVariant::ModularUtVertical, n, k, 0, p, 0, N);
    auto Q0 = lazy_quantization(c0);
    auto Qp = lazy_quantization(cp);
    auto basis = std::make_shared<std::vector<MultiIndex>>(modular_basis(n, p));
    json params = base_params(cp);
    params["alphas"] = basis->size();
    const std::string ctx = "char0-vertical -> " + cp.to_string();

    out.push_back({"modular-reduction/coefficients", ctx, params, [Q0, Qp, basis, p, N] {
                     Field F{p};
                     for (const auto& a : *basis) {
                       Scalar fact = F.from_rational(mpq_class(multi_factorial(a)));
                       for (int l = 0; l <= N; ++l) {
                         LieElement lhs = reduce_to_modular(Q0->get().d_ell(a, l), p);
                         LieElement rhs = fact * Qp->get().d_ell(a, l);
                         std::string w = lie_diff(lhs, rhs);
                         if (!w.empty()) return verdict("alpha=" + at_index(a) + " l=" + std::to_string(l) + ": " + w);
                       }
                     }
                     return CheckOutcome{};
                   }});
    out.push_back({"modular-reduction/oracle-char0", c0.to_string(), params, [Q0, basis, N] {
                     return verdict(oracle_mismatch(Q0->get(), *basis, N));
                   }});
    out.push_back({"modular-reduction/oracle-modular", cp.to_string(), params, [Qp, basis, N] {
                     return verdict(oracle_mismatch(Qp->get(), *basis, N));
                   }});
    out.push_back({"modular-reduction/coproduct", ctx, params, [Q0, Qp, basis, p] {
                     const Quantization& q0 = Q0->get();
                     const Quantization& qp = Qp->get();
                     Field F{p};
                     for (const auto& a : *basis) {
                       Scalar fact = F.from_rational(mpq_class(multi_factorial(a)));
                       auto lhs = q0.delta(a).map([&](const Tensor2& t) { return reduce_tensor(qp.env(), t); });
                       auto rhs = qp.delta(a);
                       rhs *= fact;
                       // the char-0 side lives over Q; compare degreewise in the F_p series
                       TPoly<Tensor2> l2(qp.mode());
                       for (int d = 0; d <= lhs.max_degree(); ++d) l2.add_at(d, lhs[d]);
                       std::string w = series_diff(qp.env(), l2, rhs);
                       if (!w.empty()) return verdict("alpha=" + at_index(a) + " " + w);
                     }
                     return CheckOutcome{};
                   }});
  }
}

// ---------------------------------------------------------------------------
// Hopf axioms of u_{t,q}, shared by the vertical and horizontal suites

void add_hopf_checks(const std::string& prefix, const QuantizationContext& qc,
                     std::shared_ptr<Lazy<Quantization>> Q, std::uint64_t seed, std::vector<Check>& out) {
  auto basis = std::make_shared<std::vector<MultiIndex>>(modular_basis(qc.n, qc.p));
  json params = base_params(qc);
  params["generators"] = basis->size();
  const std::string ctx = qc.to_string();

  using Per = std::function<std::string(const Quantization&, const MultiIndex&)>;
  auto per_generator = [&](const std::string& name, Per f) {
    out.push_back({prefix + name, ctx, params, [Q, basis, f] {
                     for (const auto& a : *basis) {
                       std::string w = f(Q->get(), a);
                       if (!w.empty()) return verdict("generator " + at_index(a) + ": " + w);
                     }
                     return CheckOutcome{};
                   }});
  };

  per_generator("coassociativity", [](const Quantization& q, const MultiIndex& a) {
    auto d = q.delta(a);
    return series_diff(q.env(), q.delta_left(d), q.delta_right(d));
  });
  per_generator("counit", [](const Quantization& q, const MultiIndex& a) {
    const Enveloping& env = q.env();
    auto d = q.delta(a);
    auto x = q.constant(env.generator(a));
    std::string w = series_diff(env, counit_left(env, d), x);
    if (!w.empty()) return "(eps x Id): " + w;
    w = series_diff(env, counit_right(env, d), x);
    return w.empty() ? w : "(Id x eps): " + w;
  });
  per_generator("antipode", [](const Quantization& q, const MultiIndex& a) {
    auto d = q.delta(a);
    TPoly<UElement> zero(q.mode());
    std::string w = series_diff(q.env(), q.antipode_left(d), zero);
    if (!w.empty()) return "m(S x Id): " + w;
    w = series_diff(q.env(), q.antipode_right(d), zero);
    return w.empty() ? w : "m(Id x S): " + w;
  });
  // Delta(x)^p = Delta(x^{[p]}) and S(x)^p = S(x^{[p]}) in the restricted quotient
  per_generator("ideal-delta", [](const Quantization& q, const MultiIndex& a) {
    const Enveloping& env = q.env();
    auto d = q.delta(a);
    auto pw = d;
    for (std::uint32_t i = 1; i < q.context().p; ++i) pw = tpoly_mul(env, pw, d);
    TPoly<Tensor2> target = is_toral(a) ? d : TPoly<Tensor2>(q.mode());
    return series_diff(env, pw, target);
  });
  per_generator("ideal-antipode", [](const Quantization& q, const MultiIndex& a) {
    const Enveloping& env = q.env();
    auto s = q.antipode(a);
    auto pw = s;
    for (std::uint32_t i = 1; i < q.context().p; ++i) pw = tpoly_mul(env, pw, s);
    TPoly<UElement> target = is_toral(a) ? s : TPoly<UElement>(q.mode());
    return series_diff(env, pw, target);
  });
  per_generator("t0-specialization", [](const Quantization& q, const MultiIndex& a) {
    const Enveloping& env = q.env();
    UElement x = env.generator(a);
    if (!(q.delta(a)[0] == env.delta0(x))) return std::string("Delta at t=0 differs from Delta0");
    if (!(q.antipode(a)[0] == env.s0(x))) return std::string("S at t=0 differs from S0");
    return std::string();
  });

  // algebra-map extension checked on random products of generators
  out.push_back({prefix + "algebra-map", ctx, [&] {
                   json j = params;
                   j["seed"] = seed;
                   j["pairs"] = 12;
                   return j;
                 }(),
                 [Q, basis, seed] {
                   const Quantization& q = Q->get();
                   const Enveloping& env = q.env();
                   std::mt19937_64 rng(seed);
                   std::uniform_int_distribution<std::size_t> pick(0, basis->size() - 1);
                   for (int i = 0; i < 12; ++i) {
                     const MultiIndex& a = (*basis)[pick(rng)];
                     const MultiIndex& b = (*basis)[pick(rng)];
                     UElement xy = env.multiply(env.generator(a), env.generator(b));
                     std::string where = "x=" + at_index(a) + " y=" + at_index(b) + ": ";
                     std::string w = series_diff(env, q.delta(xy), tpoly_mul(env, q.delta(a), q.delta(b)));
                     if (!w.empty()) return verdict(where + "Delta(xy): " + w);
                     w = series_diff(env, q.antipode(xy), tpoly_mul(env, q.antipode(b), q.antipode(a)));
                     if (!w.empty()) return verdict(where + "S(xy): " + w);
                   }
                   return CheckOutcome{};
                 }});

  // t specialized to a root of t^p - qt
  out.push_back({prefix + "specialized-axioms", ctx, params, [Q, basis] {
                   const Quantization& q = Q->get();
                   const Enveloping& env = q.env();
                   Field F = env.field();
                   std::vector<Scalar> roots{F.zero()};
                   if (q.context().q % static_cast<long>(q.context().p) == 1)
                     for (std::uint32_t c = 1; c < q.context().p; ++c) roots.push_back(F.from_int(c));
                   for (const auto& a : *basis) {
                     auto d = q.delta(a);
                     auto dl = q.delta_left(d), dr = q.delta_right(d);
                     auto sl = q.antipode_left(d);
                     for (const Scalar& c : roots) {
                       std::string where = "generator " + at_index(a) + " t=" + c.to_string() + ": ";
                       if (!(evaluate_at(dl, c) == evaluate_at(dr, c))) return verdict(where + "coassociativity");
                       if (!evaluate_at(sl, c).is_zero()) return verdict(where + "antipode axiom");
                     }
                   }
                   return CheckOutcome{};
                 }});
}

// Radford subalgebra generated by h and f = (1 - et)^{-1}.
std::string radford_mismatch(const Quantization& q) {
  const Enveloping& env = q.env();
  const int p = static_cast<int>(q.context().p);
  auto h = q.constant(q.h());
  auto f = q.one_minus_et(-1);
  auto one = q.constant(env.one());
  auto mul = [&](const TPoly<UElement>& a, const TPoly<UElement>& b) { return tpoly_mul(env, a, b); };
  auto pow = [&](const TPoly<UElement>& a, int k) {
    auto r = one;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
  };
  std::string w = series_diff(env, mul(h, f) - mul(f, h), mul(f, f) - f);
  if (!w.empty()) return "[h,f] = f^2 - f: " + w;
  w = series_diff(env, pow(h, p), h);
  if (!w.empty()) return "h^p = h: " + w;
  w = series_diff(env, pow(f, p), one);
  if (!w.empty()) return "f^p = 1: " + w;
  auto dh = tensor_left_one(env, h);
  dh += tpoly_mul(h, f, [&](const UElement& a, const UElement& b) { return env.tensor(a, b); });
  w = series_diff(env, q.delta(q.h()), dh);
  if (!w.empty()) return "Delta(h) = h(x)f + 1(x)h: " + w;
  // f^{-1} = 1 - et
  auto sh = mul(h, q.one_minus_et(1));
  sh *= env.field().from_int(-1);
  w = series_diff(env, q.antipode(q.h()), sh);
  if (!w.empty()) return "S(h) = -h f^{-1}: " + w;
  return {};
}

// ---------------------------------------------------------------------------
// utq-hopf (vertical)

void suite_utq(const SuiteConfig& cfg, std::vector<Check>& out) {
  const int n = cfg.n.value_or(1), k = cfg.k.value_or(1);
  const std::uint32_t p = cfg.p.value_or(3);
  std::vector<long> qs = cfg.q ? std::vector<long>{*cfg.q} : std::vector<long>{0, 1};
  for (long q : qs) {
    QuantizationContext qc = make_context(QVariant::ModularUtqVertical, n, k, 0, p, q, 0);
    auto Q = lazy_quantization(qc);
    add_hopf_checks("utq-hopf/", qc, Q, mix_seed(cfg.seed, 11 + static_cast<std::uint64_t>(q)), out);
    out.push_back({"utq-hopf/radford", qc.to_string(), base_params(qc), [Q] { return verdict(radford_mismatch(Q->get())); }});
  }

  // special values of d^{(l)} on toral generators and on p-th powers
  QuantizationContext qc = make_context(QVariant::ModularUtVertical, n, k, 0, p, 0, static_cast<int>(p) - 1);
  out.push_back({"utq-hopf/special-values", qc.to_string(), base_params(qc), [qc] {
                   Quantization q(qc);
                   Enveloping U(q.env().context(), false);
                   Field F{qc.p};
                   UElement e = U.from_lie(q.pair().e);
                   for (const auto& a : modular_basis(qc.n, qc.p)) {
                     const bool toral_k = a == MultiIndex::unit(qc.n, qc.k) + MultiIndex::unit(qc.n, -qc.k);
                     UElement xp = U.power(U.generator(a), static_cast<int>(qc.p));
                     for (int l = 0; l < static_cast<int>(qc.p); ++l) {
                       UElement want = l == 0 ? xp : UElement();
                       if (l == 1 && toral_k) want = -e;
                       if (!(U.divided_ad_power(e, xp, l) == want))
                         return verdict("d^(" + std::to_string(l) + ") of the p-th power of " + at_index(a));
                       if (is_toral(a)) {
                         LieElement lw(q.env().context());
                         if (l == 0) lw = LieElement::basis(lw.context(), a);
                         if (l == 1 && toral_k) lw = F.from_int(-1) * q.pair().e;
                         std::string w = lie_diff(q.d_ell(a, l), lw);
                         if (!w.empty()) return verdict("toral " + at_index(a) + " l=" + std::to_string(l) + ": " + w);
                       }
                     }
                   }
                   return CheckOutcome{};
                 }});

  const std::size_t dim = modular_basis(n, p).size();
  if (dim <= 8) {
    json params = {{"n", n}, {"p", p}, {"lie_dim", dim}};
    out.push_back({"utq-hopf/monomial-count", "u(H(2n;1)) n=" + std::to_string(n) + " p=" + std::to_string(p),
                   params, [n, p, dim] {
                     Enveloping u(LieContext::modular(n, p), true);
                     mpz_class want;
                     mpz_ui_pow_ui(want.get_mpz_t(), p, dim);
                     mpz_class got = static_cast<unsigned long>(u.restricted_monomials().size());
                     return verdict(got == want ? "" : "enumerated " + got.get_str() + ", expected " + want.get_str());
                   }});
  }
}

// ---------------------------------------------------------------------------
// horizontal

void suite_horizontal(const SuiteConfig& cfg, std::vector<Check>& out) {
  const int n = cfg.n.value_or(2), k = cfg.k.value_or(1), m = cfg.m.value_or(2);
  const std::uint32_t p = cfg.p.value_or(3);
  const int N = cfg.N.value_or(4);
  std::vector<long> qs = cfg.q ? std::vector<long>{*cfg.q} : std::vector<long>{0, 1};
  std::mt19937_64 rng(mix_seed(cfg.seed, 29));

  QuantizationContext c0 = make_context(QVariant::Char0Horizontal, n, k, m, 0, 0, N);
  QuantizationContext cp = make_context(QVariant::ModularUtHorizontal, n, k, m, p, 0, static_cast<int>(p) - 1);
  auto Q0 = lazy_quantization(c0);
  auto Qp = lazy_quantization(cp);

  // coefficient families against repeated brackets
  auto char0_alphas = std::make_shared<std::vector<MultiIndex>>(random_indices(n, 3, 200, rng));
  std::vector<MultiIndex> full = modular_basis(n, p);
  const bool exhaustive = full.size() <= 1000;
  auto mod_alphas = std::make_shared<std::vector<MultiIndex>>(exhaustive ? full : sample(full, 200, rng));
  std::shared_ptr<std::vector<MultiIndex>> p5_alphas;
  const bool extra_p5 = !cfg.p;
  if (extra_p5) p5_alphas = std::make_shared<std::vector<MultiIndex>>(sample(modular_basis(n, 5), 200, rng));
  QuantizationContext c5 = make_context(QVariant::ModularUtHorizontal, n, k, m, 5, 0, 4);
  auto Q5 = lazy_quantization(c5);

  {
    json params = base_params(c0);
    params["seed"] = cfg.seed;
    params["alphas"] = char0_alphas->size();
    out.push_back({"horizontal/coefficients-char0", c0.to_string(), params, [Q0, char0_alphas, N] {
                     return verdict(oracle_mismatch(Q0->get(), *char0_alphas, N));
                   }});
    json pp = base_params(cp);
    pp["alphas"] = mod_alphas->size();
    pp["sampling"] = exhaustive ? "exhaustive" : "sampled";
    out.push_back({"horizontal/coefficients-modular", cp.to_string(), pp, [Qp, mod_alphas, p] {
                     return verdict(oracle_mismatch(Qp->get(), *mod_alphas, static_cast<int>(p) - 1));
                   }});
    if (extra_p5) {
      json p5 = base_params(c5);
      p5["alphas"] = p5_alphas->size();
      p5["sampling"] = "sampled";
      p5["seed"] = cfg.seed;
      out.push_back({"horizontal/coefficients-modular", c5.to_string(), p5, [Q5, p5_alphas] {
                       return verdict(oracle_mismatch(Q5->get(), *p5_alphas, 4));
                     }});
    }
  }

  // the statement's lower binomial index must disagree with the oracle somewhere
  out.push_back({"horizontal/bbar-statement-vs-proof", cp.to_string(), base_params(cp),
                 [cp, c5, mod_alphas, p5_alphas, p, extra_p5] {
                   FormulaOptions stmt;
                   stmt.bbar = BbarIndex::StatementAsPrinted;
                   std::string w = oracle_mismatch(Quantization(cp, stmt), *mod_alphas, static_cast<int>(p) - 1);
                   if (w.empty() && extra_p5) w = oracle_mismatch(Quantization(c5, stmt), *p5_alphas, 4);
                   if (w.empty()) return verdict("statement reading agrees with the oracle on every sampled cell");
                   return CheckOutcome{CheckStatus::Pass, clip("statement reading differs: " + w)};
                 }});
  out.push_back({"horizontal/control-flip-sigma", c0.to_string(), base_params(c0), [c0, cp, char0_alphas, mod_alphas, p] {
                   FormulaOptions bad;
                   bad.horizontal.flip_sigma = true;
                   std::string w = oracle_mismatch(Quantization(c0, bad), *char0_alphas, c0.N);
                   if (w.empty()) w = oracle_mismatch(Quantization(cp, bad), *mod_alphas, static_cast<int>(p) - 1);
                   return control(w, "wrong-sign sigma(m)");
                 }});

  // closed forms against conjugation by the horizontal twist
  {
    QuantizationContext ct = make_context(QVariant::Char0Horizontal, n, k, m, 0, 0, cfg.N.value_or(3));
    auto Qt = lazy_quantization(ct);
    auto alphas = std::make_shared<std::vector<MultiIndex>>(sample(plus_basis(n, 3), 12, rng));
    json params = base_params(ct);
    params["alphas"] = alphas->size();
    params["seed"] = cfg.seed;
    out.push_back({"horizontal/closed-vs-twist", ct.to_string(), params, [Qt, alphas] {
                     const Quantization& q = Qt->get();
                     const Enveloping& env = q.env();
                     Twist f = Twist::basic(env, q.pair(), q.mode());
                     auto w = twist_w(env, f), wi = twist_w_inverse(env, f);
                     for (const auto& a : *alphas) {
                       UElement x = env.generator(a);
                       std::string d = series_diff(env, q.delta(a), twist_coproduct(env, f, x));
                       if (!d.empty()) return verdict("Delta " + at_index(a) + ": " + d);
                       auto conj = series_mul(env, series_mul(env, w, q.constant(env.s0(x))), wi);
                       d = series_diff(env, q.antipode(a), conj);
                       if (!d.empty()) return verdict("S " + at_index(a) + ": " + d);
                     }
                     return CheckOutcome{};
                   }});
  }

  // identities for powers of a basis element, s <= 3
  {
    QuantizationContext cl = make_context(QVariant::Char0Horizontal, n, k, m, 0, 0, 3);
    auto Ql = lazy_quantization(cl);
    auto alphas = std::make_shared<std::vector<MultiIndex>>(sample(plus_basis(n, 3), 8, rng));
    json params = base_params(cl);
    params["alphas"] = alphas->size();
    params["s_max"] = 3;
    params["seed"] = cfg.seed;
    const std::string ctx = cl.to_string();

    out.push_back({"horizontal/ad-power-identity", ctx, params, [cl, alphas] {
                     // (ad X)^s e in the full algebra H, against the A(i,k) double product
                     const int n = cl.n, k = cl.k, m = cl.m;
                     auto full = LieContext::full(n);
                     LieElement e = LieElement::basis(full, MultiIndex::unit(n, k) + MultiIndex::unit(n, m));
                     MultiIndex tk = MultiIndex::unit(n, k) + MultiIndex::unit(n, -k);
                     MultiIndex tm = MultiIndex::unit(n, m) + MultiIndex::unit(n, -m);
                     for (const auto& a : *alphas) {
                       LieElement X = LieElement::basis(full, a), ad = e;
                       for (int s = 1; s <= 3; ++s) {
                         ad = bracket(X, ad);
                         LieElement want(full);
                         Scalar neg_sigma = -sigma(m), pw(1);
                         for (int i = 0; i <= s; ++i, pw *= neg_sigma) {
                           Scalar c = Scalar::rational(mpq_class(binomial(s, i))) * pw * coeff_A_ik(a, s - i - 1, k) *
                                      coeff_A_ik(a, i - 1, m);
                           MultiIndex b = s * a - i * tm - (s - i) * tk + MultiIndex::unit(n, k) + MultiIndex::unit(n, m);
                           if (!b.is_zero() && !c.is_zero()) want += LieElement::basis(full, b, c);
                         }
                         std::string w = lie_diff(ad, want);
                         if (!w.empty()) return verdict(at_index(a) + " s=" + std::to_string(s) + ": " + w);
                       }
                     }
                     return CheckOutcome{};
                   }});

    // the three twist-commutation identities share their setup
    auto commutation = [Ql, alphas](int which) {
      return [Ql, alphas, which] {
        const Quantization& q = Ql->get();
        const Enveloping& env = q.env();
        const TMode mode = q.mode();
        const TwistPair& pair = q.pair();
        const int k = q.context().k;
        UElement h = q.h(), e = q.e();
        for (const auto& a : *alphas) {
          const int shift = a.at(-k) - a.at(k);
          UElement X = env.generator(a), Xs = env.one();
          for (int s = 1; s <= 3; ++s) {
            Xs = env.multiply(Xs, X);
            for (int av = -1; av <= 1; ++av) {
              Scalar A(av);
              std::string where = at_index(a) + " s=" + std::to_string(s) + " a=" + std::to_string(av) + ": ";
              std::string w;
              if (which == 0) {
                auto Fa = build_twist(env, pair, A, TwistVariant::F, mode).body;
                auto Fb = build_twist(env, pair, A + Scalar(s * shift), TwistVariant::F, mode).body;
                auto XL = tpoly_constant(mode, env.tensor(Xs, env.one()));
                w = series_diff(env, series_mul(env, XL, Fa), series_mul(env, Fb, XL));
              } else if (which == 1) {
                auto ua = build_u_v(env, pair, A, mode).u;
                auto ub = build_u_v(env, pair, A - Scalar(s * shift), mode).u;
                TPoly<UElement> sum(mode);
                for (int l = 0; l <= mode.N; ++l)
                  sum.add_at(l, env.multiply(env.divided_ad_power(e, Xs, l),
                                             env.factorial_poly(h, Scalar(1) - A, l, FactorialKind::Rising)));
                w = series_diff(env, series_mul(env, q.constant(Xs), ua), series_mul(env, ub, sum));
              } else {
                auto Fa = build_twist(env, pair, A, TwistVariant::F, mode).body;
                TPoly<Tensor2> rhs(mode);
                for (int l = 0; l <= mode.N; ++l) {
                  auto Fl = build_twist(env, pair, A + Scalar(l), TwistVariant::F, mode).body;
                  TPoly<Tensor2> tl(mode);
                  Tensor2 term = env.tensor(env.factorial_poly(h, A, l, FactorialKind::Rising),
                                            env.divided_ad_power(e, Xs, l));
                  if (l % 2) term = -term;
                  tl.add_at(l, term);
                  rhs += series_mul(env, Fl, tl);
                }
                w = series_diff(env, series_mul(env, tpoly_constant(mode, env.tensor(env.one(), Xs)), Fa), rhs);
              }
              if (!w.empty()) return verdict(where + w);
            }
          }
        }
        return CheckOutcome{};
      };
    };
    out.push_back({"horizontal/twist-left-commutation", ctx, params, commutation(0)});
    out.push_back({"horizontal/u-shift-identity", ctx, params, commutation(1)});
    out.push_back({"horizontal/twist-right-commutation", ctx, params, commutation(2)});

    out.push_back({"horizontal/power-coproduct", ctx, params, [Ql, alphas] {
                     const Quantization& q = Ql->get();
                     const Enveloping& env = q.env();
                     const TMode mode = q.mode();
                     const int k = q.context().k;
                     UElement e = q.e(), h = q.h();
                     for (const auto& a : *alphas) {
                       UElement X = env.generator(a);
                       const int wt = a.at(k) - a.at(-k);
                       for (int s = 1; s <= 3; ++s) {
                         TPoly<Tensor2> want(mode);
                         for (int j = 0; j <= s; ++j) {
                           UElement Xj = env.power(X, j), Xr = env.power(X, s - j);
                           for (int l = 0; l <= mode.N; ++l) {
                             auto right = series_mul(env, q.one_minus_et(j * wt - l),
                                                     q.constant(env.divided_ad_power(e, Xr, l)));
                             UElement left = env.multiply(Xj, env.factorial_poly(h, Scalar(0), l, FactorialKind::Rising));
                             Scalar c = Scalar::rational(mpq_class(binomial(s, j))) * Scalar(l % 2 ? -1 : 1);
                             TPoly<Tensor2> piece(mode);
                             for (int d = 0; d + l <= mode.N; ++d) piece.add_at(d + l, env.tensor(left, right[d]));
                             piece *= c;
                             want += piece;
                           }
                         }
                         std::string w = series_diff(env, q.delta(env.power(X, s)), want);
                         if (!w.empty()) return verdict(at_index(a) + " s=" + std::to_string(s) + ": " + w);
                       }
                     }
                     return CheckOutcome{};
                   }});
    out.push_back({"horizontal/power-antipode", ctx, params, [Ql, alphas] {
                     const Quantization& q = Ql->get();
                     const Enveloping& env = q.env();
                     const TMode mode = q.mode();
                     const int k = q.context().k;
                     UElement e = q.e(), h = q.h();
                     for (const auto& a : *alphas) {
                       UElement X = env.generator(a);
                       const int wt = a.at(k) - a.at(-k);
                       for (int s = 1; s <= 3; ++s) {
                         UElement Xs = env.power(X, s);
                         TPoly<UElement> sum(mode);
                         for (int l = 0; l <= mode.N; ++l)
                           sum.add_at(l, env.multiply(env.divided_ad_power(e, Xs, l),
                                                      env.factorial_poly(h, Scalar(1), l, FactorialKind::Rising)));
                         auto want = series_mul(env, q.one_minus_et(-s * wt), sum);
                         if (s % 2) want *= Scalar(-1);
                         std::string w = series_diff(env, q.antipode(Xs), want);
                         if (!w.empty()) return verdict(at_index(a) + " s=" + std::to_string(s) + ": " + w);
                       }
                     }
                     return CheckOutcome{};
                   }});
  }

  // special values: toral generators and p-th powers in the unrestricted U over F_p
  out.push_back({"horizontal/special-values", cp.to_string(), base_params(cp), [cp] {
                   Quantization q(cp);
                   Enveloping U(q.env().context(), false);
                   Field F{cp.p};
                   UElement e = U.from_lie(q.pair().e);
                   const int k = cp.k, m = cp.m;
                   for (const auto& a : modular_basis(cp.n, cp.p)) {
                     auto toral_at = [&](int i) { return a == MultiIndex::unit(cp.n, i) + MultiIndex::unit(cp.n, -i); };
                     int cpow = (toral_at(k) ? 1 : 0) - (toral_at(std::abs(m)) ? sigma_sign(m) : 0);
                     UElement xp = U.power(U.generator(a), static_cast<int>(cp.p));
                     for (int l = 0; l < static_cast<int>(cp.p); ++l) {
                       UElement want = l == 0 ? xp : UElement();
                       if (l == 1 && cpow) want = U.multiply(U.scalar(F.from_int(-cpow)), e);
                       if (!(U.divided_ad_power(e, xp, l) == want))
                         return verdict("d^(" + std::to_string(l) + ") of the p-th power of " + at_index(a));
                     }
                     if (is_toral(a)) {
                       int i = 0;
                       for (int j = 1; j <= cp.n; ++j)
                         if (toral_at(j)) i = j;
                       const int ctor = (i == -m) - (i == m) - (i == k);
                       for (int l = 0; l < static_cast<int>(cp.p); ++l) {
                         LieElement lw(q.env().context());
                         if (l == 0) lw = LieElement::basis(lw.context(), a);
                         if (l == 1 && ctor) lw = F.from_int(ctor) * q.pair().e;
                         std::string w = lie_diff(q.d_ell(a, l), lw);
                         if (!w.empty()) return verdict("toral " + at_index(a) + " l=" + std::to_string(l) + ": " + w);
                       }
                     }
                   }
                   return CheckOutcome{};
                 }});

  for (long q : qs) {
    QuantizationContext qc = make_context(QVariant::ModularUtqHorizontal, n, k, m, p, q, 0);
    auto Q = lazy_quantization(qc);
    add_hopf_checks("horizontal/utq-", qc, Q, mix_seed(cfg.seed, 41 + static_cast<std::uint64_t>(q)), out);
    // Delta of toral generators: the extra term carries delta_{k,i} + delta_{m,i} - delta_{-m,i}
    out.push_back({"horizontal/utq-toral-coproduct", qc.to_string(), base_params(qc), [Q] {
                     const Quantization& q = Q->get();
                     const Enveloping& env = q.env();
                     const auto& c = q.context();
                     TPoly<UElement> t(q.mode());
                     t.add_at(1, env.one());
                     auto fet = series_mul(env, series_mul(env, q.one_minus_et(-1), q.constant(q.e())), t);
                     auto tens = [&](const UElement& a, const UElement& b) { return env.tensor(a, b); };
                     for (int i = 1; i <= c.n; ++i) {
                       MultiIndex a = MultiIndex::unit(c.n, i) + MultiIndex::unit(c.n, -i);
                       UElement x = env.generator(a);
                       auto want = tpoly_constant(q.mode(), env.tensor(x, env.one()) + env.tensor(env.one(), x));
                       const int factor = (c.k == i) + (c.m == i) - (-c.m == i);
                       TPoly<Tensor2> extra = tpoly_mul(q.constant(q.h()), fet, tens);
                       extra *= env.field().from_int(factor);
                       want += extra;
                       std::string w = series_diff(env, q.delta(a), want);
                       if (!w.empty()) return verdict("i=" + std::to_string(i) + ": " + w);
                     }
                     return CheckOutcome{};
                   }});
  }
}

// ---------------------------------------------------------------------------
// jordanian

void suite_jordanian(const SuiteConfig& cfg, std::vector<Check>& out) {
  std::vector<std::uint32_t> primes = cfg.p ? std::vector<std::uint32_t>{*cfg.p} : std::vector<std::uint32_t>{5, 7};
  const long q = cfg.q.value_or(1);
  for (std::uint32_t p : primes) {
    if (p < 3 || !is_prime(p)) throw InvalidContext("the sp_4 table needs a prime p >= 3");
    auto table = lazy<std::vector<TableRow>>([p, q] { return jordanian_sp4_table(p, q); });
    const std::string ctx = "jordanian sp_4 n=2 k=1 m=-2 p=" + std::to_string(p) + " q=" + std::to_string(q);
    static const char* const kRows[] = {"h", "h'", "e", "E[1,-2]+E[2,-1]", "E[-1,2]+E[-2,1]", "E[-1,-2]+E[2,1]",
                                        "E[1,-1]", "E[2,-2]", "E[-1,1]", "E[-2,2]"};
    for (std::size_t i = 0; i < std::size(kRows); ++i) {
      json params = {{"n", 2}, {"k", 1}, {"m", -2}, {"p", p}, {"q", q}, {"row", std::string("Delta(") + kRows[i] + ")"}};
      out.push_back({"jordanian/sp4-row", ctx, params, [table, i] {
                       const TableRow& r = table->get().at(i);
                       return r.match ? CheckOutcome{} : verdict(r.label + ": " + r.witness);
                     }});
    }
    out.push_back({"jordanian/sp2n-homomorphism", "H(4;1)_0 -> sp_4 p=" + std::to_string(p),
                   json{{"n", 2}, {"p", p}}, [p] {
                     auto ctx = LieContext::modular(2, p);
                     for (const auto& a : degree_zero_basis(2)) {
                       for (const auto& b : degree_zero_basis(2)) {
                         LieElement x = LieElement::basis(ctx, a), y = LieElement::basis(ctx, b);
                         if (!(commutator(sp2n_map(x), sp2n_map(y)) == sp2n_map(bracket(x, y))))
                           return verdict("pair " + at_index(a) + ", " + at_index(b));
                       }
                     }
                     return CheckOutcome{};
                   }});
  }
}

// ---------------------------------------------------------------------------
// dims

void suite_dims(const SuiteConfig& cfg, std::vector<Check>& out) {
  std::vector<std::pair<int, std::uint32_t>> cells;
  if (cfg.n || cfg.p) {
    cells.push_back({cfg.n.value_or(1), cfg.p.value_or(3)});
  } else {
    cells = {{1, 3}, {1, 5}, {2, 3}};
  }
  for (auto [n, p] : cells) {
    make_context(QVariant::ModularUtVertical, n, 1, 0, p, 0, 1);
    const std::string ctx = "H(2n;1) n=" + std::to_string(n) + " p=" + std::to_string(p);
    mpz_class lie_dim;
    mpz_ui_pow_ui(lie_dim.get_mpz_t(), p, 2 * n);
    lie_dim -= 2;
    out.push_back({"dims/lie-basis", ctx, json{{"n", n}, {"p", p}, {"expected", lie_dim.get_str()}}, [n, p, lie_dim] {
                     mpz_class got = static_cast<unsigned long>(modular_basis(n, p).size());
                     return verdict(got == lie_dim ? "" : "enumerated " + got.get_str());
                   }});
    const unsigned long d = lie_dim.get_ui();
    const std::string formula = std::to_string(p) + "^" + std::to_string(d);
    if (d <= 8) {
      mpz_class want;
      mpz_ui_pow_ui(want.get_mpz_t(), p, d);
      out.push_back({"dims/u-monomials", ctx, json{{"n", n}, {"p", p}, {"method", "enumeration"}, {"expected", want.get_str()}},
                     [n, p, want] {
                       Enveloping u(LieContext::modular(n, p), true);
                       mpz_class got = static_cast<unsigned long>(u.restricted_monomials().size());
                       return verdict(got == want ? "" : "enumerated " + got.get_str());
                     }});
    } else {
      out.push_back({"dims/u-monomials", ctx, json{{"n", n}, {"p", p}, {"method", "formula"}, {"expected", formula}},
                     [] { return CheckOutcome{CheckStatus::Skipped, ""}; }});
    }
    // the base ring K[t]/(t^p - qt) contributes the extra factor p
    out.push_back({"dims/t-ring", ctx,
                   json{{"n", n}, {"p", p}, {"t_ring_dim", p}, {"utq_dim", std::to_string(p) + "^" + std::to_string(d + 1)}},
                   [p] {
                     for (long q : {0L, 1L}) {
                       TMode mode = TMode::p_truncated(p, q);
                       if (mode.max_degree() + 1 != static_cast<int>(p))
                         return verdict("q=" + std::to_string(q) + ": " + std::to_string(mode.max_degree() + 1) + " t-degrees");
                     }
                     return CheckOutcome{};
                   }});
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all",        "cocycle",   "char0-closed-forms", "modular-reduction",
                                              "utq-hopf",   "horizontal", "jordanian",          "dims"};
  return names;
}

std::vector<Check> build_suite(const std::string& name, const SuiteConfig& cfg) {
  using Builder = void (*)(const SuiteConfig&, std::vector<Check>&);
  static const std::map<std::string, Builder> builders{
      {"cocycle", suite_cocycle},   {"char0-closed-forms", suite_char0}, {"modular-reduction", suite_reduction},
      {"utq-hopf", suite_utq},      {"horizontal", suite_horizontal},     {"jordanian", suite_jordanian},
      {"dims", suite_dims}};
  std::vector<Check> out;
  if (name == "all") {
    for (const auto& s : suite_names())
      if (s != "all") builders.at(s)(cfg, out);
    return out;
  }
  auto it = builders.find(name);
  if (it == builders.end()) throw InvalidContext("unknown suite: " + name);
  it->second(cfg, out);
  return out;
}

}  // namespace cartanh
