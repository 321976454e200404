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


#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cartanh.h"

namespace {

struct Options {
  std::string variant = "char0-vertical";
  std::optional<int64_t> n, k, m, p, q, N, jobs, seed;
  bool timing = false;
  std::string elt;
  std::string format = "text";
  std::string op;
  std::string suite;
};

void add_context_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--variant", o.variant, "char0-vertical, char0-horizontal, ut-vertical, utq, ut-horizontal, "
                                          "utq-horizontal, jordanian");
  cmd->add_option("--n", o.n, "rank n");
  cmd->add_option("--k", o.k, "twist index k");
  cmd->add_option("--m", o.m, "horizontal partner m");
  cmd->add_option("--p", o.p, "prime p");
  cmd->add_option("--q", o.q, "t^p = q t");
  cmd->add_option("--N", o.N, "t-truncation degree");
}

int report(cartanh_session* s, cartanh_status st) {
  if (st != CARTANH_OK && st != CARTANH_CHECK_FAILED) std::cerr << "error: " << cartanh_last_error(s) << "\n";
  return static_cast<int>(st);
}

int configure(cartanh_session* s, const Options& o) {
  if (auto st = cartanh_set_variant(s, o.variant.c_str()); st != CARTANH_OK) return report(s, st);
  const std::pair<cartanh_param, const std::optional<int64_t>*> params[] = {
      {CARTANH_PARAM_N, &o.n}, {CARTANH_PARAM_K, &o.k},        {CARTANH_PARAM_M, &o.m},
      {CARTANH_PARAM_P, &o.p}, {CARTANH_PARAM_Q, &o.q},        {CARTANH_PARAM_TRUNC, &o.N},
      {CARTANH_PARAM_JOBS, &o.jobs}, {CARTANH_PARAM_SEED, &o.seed}};
  for (const auto& [key, val] : params)
    if (*val)
      if (auto st = cartanh_set_param(s, key, **val); st != CARTANH_OK) return report(s, st);
  if (auto st = cartanh_set_param(s, CARTANH_PARAM_TIMING, o.timing); st != CARTANH_OK) return report(s, st);
  return 0;
}

int run_compute(cartanh_session* s, const Options& o) {
  static const std::map<std::string, cartanh_op> ops{
      {"delta", CARTANH_DELTA}, {"antipode", CARTANH_ANTIPODE}, {"counit", CARTANH_COUNIT}};
  char* out = nullptr;
  auto st = cartanh_compute(s, ops.at(o.op), o.elt.c_str(),
                            o.format == "json" ? CARTANH_FORMAT_JSON : CARTANH_FORMAT_TEXT, &out);
  if (st != CARTANH_OK) return report(s, st);
  std::cout << out << "\n";
  cartanh_string_free(out);
  return 0;
}

int print_line(const char* line, void*) {
  std::fputs(line, stdout);
  std::fputc('\n', stdout);
  std::fflush(stdout);
  return 0;
}

int run_verify(cartanh_session* s, const Options& o) {
  cartanh_summary sum{};
  auto st = cartanh_verify(s, o.suite.c_str(), print_line, nullptr, &sum);
  if (st == CARTANH_OK || st == CARTANH_CHECK_FAILED)
    std::cerr << o.suite << ": " << sum.passed << " passed, " << sum.failed << " failed, " << sum.skipped
              << " skipped\n";
  return report(s, st);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Hopf structures of twisted Cartan type H algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cartanh_version()));

  auto* compute = app.add_subcommand("compute", "print Delta, S or epsilon of an element");
  compute->add_option("op", o.op, "delta | antipode | counit")
      ->required()
      ->check(CLI::IsMember({"delta", "antipode", "counit"}));
  compute->add_option("--elt", o.elt, "element, e.g. \"2*DH[1;1] - DH[0;3]\" or \"DHp[1;1]@3\"")->required();
  compute->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));
  add_context_flags(compute, o);

  char* names = nullptr;
  cartanh_suite_names(&names);
  std::vector<std::string> suites;
  for (const auto& part : CLI::detail::split(names ? names : "", '\n')) suites.push_back(part);
  cartanh_string_free(names);

  auto* verify = app.add_subcommand("verify", "run a verification suite, JSON Lines on stdout");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suites));
  add_context_flags(verify, o);
  verify->add_option("--jobs", o.jobs, "worker threads (default: CARTANH_JOBS or hardware)");
  verify->add_option("--seed", o.seed, "seed for sampled checks");
  verify->add_flag("--timing", o.timing, "record wall_time_ms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return CARTANH_ERR_CONFIG;
  }

  cartanh_session* s = nullptr;
  if (cartanh_session_new(&s) != CARTANH_OK) return CARTANH_ERR_INTERNAL;
  int rc = configure(s, o);
  if (rc == 0) rc = compute->parsed() ? run_compute(s, o) : run_verify(s, o);
  cartanh_session_free(s);
  return rc;
}
