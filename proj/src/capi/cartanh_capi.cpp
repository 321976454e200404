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


#include "cartanh.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include <json.hpp>

#include "cartanh/parse.hpp"
#include "cartanh/quantization.hpp"
#include "cartanh/verify.hpp"

struct cartanh_session {
  std::string variant = "char0-vertical";
  cartanh::SuiteConfig cfg;
  std::string error;
};

namespace {

using namespace cartanh;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cartanh_status fail(cartanh_session* s, cartanh_status code, const std::string& msg) {
  if (s) s->error = msg;
  return code;
}

// Maps exceptions to status codes; order matters since several derive from
// std::invalid_argument.
template <class F>
cartanh_status guarded(cartanh_session* s, F body) {
  try {
    s->error.clear();
    return body();
  } catch (const ParseError& e) {
    return fail(s, CARTANH_ERR_PARSE, e.what());
  } catch (const InadmissibleElement& e) {
    return fail(s, CARTANH_ERR_INADMISSIBLE, e.what());
  } catch (const InvalidContext& e) {
    return fail(s, CARTANH_ERR_CONFIG, e.what());
  } catch (const std::exception& e) {
    return fail(s, CARTANH_ERR_INTERNAL, e.what());
  }
}

// Unset parameters fall back to defaults that make the variant usable: the
// horizontal family needs n >= 2 and a partner m, jordanian is the sp_4 pair.
QuantizationContext compute_context(const cartanh_session& s) {
  QuantizationContext c;
  c.variant = parse_variant(s.variant);
  const SuiteConfig& g = s.cfg;
  bool jordanian = c.variant == QVariant::JordanianSp2n;
  c.n = g.n.value_or(c.horizontal() ? 2 : 1);
  c.k = g.k.value_or(1);
  c.m = g.m.value_or(jordanian ? -2 : (c.horizontal() ? 2 : 0));
  c.p = g.p.value_or(0);
  c.q = g.q.value_or(jordanian ? 1 : 0);
  c.N = g.N.value_or(c.N);
  c.validate();
  return c;
}

template <class V>
nlohmann::ordered_json degrees_json(const Enveloping& env, const TPoly<V>& a) {
  auto arr = nlohmann::ordered_json::array();
  for (int d = 0; d <= a.max_degree(); ++d) {
    if (a[d].is_zero()) continue;
    arr.push_back({{"t", d}, {"value", env.format(a[d])}});
  }
  return arr;
}

}  // namespace

extern "C" {

const char* cartanh_version(void) { return "0.1.0"; }

cartanh_status cartanh_session_new(cartanh_session** out) {
  if (!out) return CARTANH_ERR_ARGUMENT;
  try {
    *out = new cartanh_session();
  } catch (...) {
    return CARTANH_ERR_INTERNAL;
  }
  return CARTANH_OK;
}

void cartanh_session_free(cartanh_session* s) { delete s; }

const char* cartanh_last_error(const cartanh_session* s) { return s ? s->error.c_str() : "null session"; }

cartanh_status cartanh_set_variant(cartanh_session* s, const char* variant) {
  if (!s) return CARTANH_ERR_ARGUMENT;
  if (!variant) return fail(s, CARTANH_ERR_ARGUMENT, "variant is null");
  return guarded(s, [&] {
    parse_variant(variant);
    s->variant = variant;
    return CARTANH_OK;
  });
}

cartanh_status cartanh_set_param(cartanh_session* s, cartanh_param param, int64_t v) {
  if (!s) return CARTANH_ERR_ARGUMENT;
  auto small = [&](long lo, long hi) {
    if (v < lo || v > hi) throw InvalidContext("parameter value " + std::to_string(v) + " out of range");
    return static_cast<int>(v);
  };
  return guarded(s, [&] {
    SuiteConfig& g = s->cfg;
    switch (param) {
      case CARTANH_PARAM_N: g.n = small(1, 64); break;
      case CARTANH_PARAM_K: g.k = small(-64, 64); break;
      case CARTANH_PARAM_M: g.m = small(-64, 64); break;
      case CARTANH_PARAM_P: g.p = static_cast<std::uint32_t>(small(2, 1 << 20)); break;
      case CARTANH_PARAM_Q: g.q = static_cast<long>(v); break;
      case CARTANH_PARAM_TRUNC: g.N = small(0, 64); break;
      case CARTANH_PARAM_JOBS: g.jobs = static_cast<unsigned>(small(0, 1024)); break;
      case CARTANH_PARAM_SEED: g.seed = static_cast<std::uint64_t>(v); break;
      case CARTANH_PARAM_TIMING: g.timing = v != 0; break;
      default: throw InvalidContext("unknown parameter " + std::to_string(static_cast<int>(param)));
    }
    return CARTANH_OK;
  });
}

cartanh_status cartanh_compute(cartanh_session* s, cartanh_op op, const char* element, cartanh_format format,
                               char** out) {
  if (!s) return CARTANH_ERR_ARGUMENT;
  if (!element || !out) return fail(s, CARTANH_ERR_ARGUMENT, "element and out must be non-null");
  *out = nullptr;
  return guarded(s, [&] {
    Quantization Q(compute_context(*s));
    const Enveloping& env = Q.env();
    UElement x = parse_element(env, element);
    for (const auto& [mono, c] : x.terms())
      for (const auto& f : mono.factors()) Q.check_admissible(f.key);

    nlohmann::ordered_json j;
    j["op"] = op == CARTANH_DELTA ? "delta" : op == CARTANH_ANTIPODE ? "antipode" : "counit";
    j["context"] = Q.context().to_string();
    j["element"] = env.format(x);
    std::string text;
    switch (op) {
      case CARTANH_DELTA: {
        auto d = Q.delta(x);
        text = format_tpoly(env, d);
        j["degrees"] = degrees_json(env, d);
        break;
      }
      case CARTANH_ANTIPODE: {
        auto a = Q.antipode(x);
        text = format_tpoly(env, a);
        j["degrees"] = degrees_json(env, a);
        break;
      }
      case CARTANH_COUNIT: {
        // epsilon kills every Lie generator, so only the unit monomial survives.
        Scalar e = env.field().zero();
        for (const auto& [mono, c] : x.terms())
          if (mono.is_unit()) e += c;
        text = e.to_string();
        j["value"] = text;
        break;
      }
      default:
        throw InvalidContext("unknown operation");
    }
    *out = dup(format == CARTANH_FORMAT_JSON ? j.dump() : text);
    return *out ? CARTANH_OK : fail(s, CARTANH_ERR_INTERNAL, "out of memory");
  });
}

cartanh_status cartanh_verify(cartanh_session* s, const char* suite, cartanh_record_fn on_record, void* user,
                              cartanh_summary* summary) {
  if (!s) return CARTANH_ERR_ARGUMENT;
  if (!suite) return fail(s, CARTANH_ERR_ARGUMENT, "suite is null");
  return guarded(s, [&] {
    auto checks = build_suite(suite, s->cfg);
    cartanh_summary sum{};
    bool forward = on_record != nullptr;
    run_checks(checks, s->cfg, [&](const CheckRecord& r) {
      ++sum.total;
      if (r.status == CheckStatus::Pass) ++sum.passed;
      if (r.status == CheckStatus::Fail) ++sum.failed;
      if (r.status == CheckStatus::Skipped) ++sum.skipped;
      if (forward && on_record(to_json_line(r).c_str(), user) != 0) forward = false;
    });
    if (summary) *summary = sum;
    if (sum.failed == 0) return CARTANH_OK;
    return fail(s, CARTANH_CHECK_FAILED, std::to_string(sum.failed) + " of " + std::to_string(sum.total) +
                                             " checks failed");
  });
}

cartanh_status cartanh_suite_names(char** out) {
  if (!out) return CARTANH_ERR_ARGUMENT;
  std::string s;
  for (const auto& n : suite_names()) s += (s.empty() ? "" : "\n") + n;
  *out = dup(s);
  return *out ? CARTANH_OK : CARTANH_ERR_INTERNAL;
}

void cartanh_string_free(char* str) { std::free(str); }

}  // extern "C"
