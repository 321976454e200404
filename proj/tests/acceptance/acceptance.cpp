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


// Runs the full suite through the C API and prints one PASS/FAIL line per
// acceptance criterion. Exit status is 0 iff the failing set equals the
// --known-failing set (empty by default).

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartanh.h"

namespace {

using Json = nlohmann::json;

struct Criterion {
  int id;
  const char* title;
  std::function<bool(const Json&)> covers;
};

bool id_is(const Json& r, std::initializer_list<const char*> ids) {
  const auto& id = r["check_id"].get_ref<const std::string&>();
  for (const char* want : ids)
    if (id == want) return true;
  return false;
}

bool in_suite(const Json& r, const std::string& suite) {
  return r["check_id"].get_ref<const std::string&>().rfind(suite + "/", 0) == 0;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "cocycle identity, vertical n=1,2 to t^5 and horizontal (1,2) to t^4",
       [](const Json& r) { return id_is(r, {"cocycle/vertical", "cocycle/horizontal"}); }},
      {2, "twist shift grid a,b in {-1,0,1,2}, N=6",
       [](const Json& r) { return id_is(r, {"cocycle/twist-shift-grid"}); }},
      {3, "char-0 closed forms against conjugation, |alpha| <= 4, n=1, N=4",
       [](const Json& r) {
         return id_is(r, {"char0-closed-forms/delta", "char0-closed-forms/antipode", "char0-closed-forms/counit"});
       }},
      {4, "modular reduction of the vertical coefficients, n=1, p in {3,5}",
       [](const Json& r) { return in_suite(r, "modular-reduction"); }},
      {5, "u_{t,q} Hopf axioms, n=1, p=3, q in {0,1}, and 3^7 monomials",
       [](const Json& r) {
         if (in_suite(r, "utq-hopf")) return true;
         const auto& p = r["parameters"];
         return id_is(r, {"dims/u-monomials"}) && p.value("n", 0) == 1 && p.value("p", 0) == 3;
       }},
      {6, "horizontal coefficient families, identities and u_{t,q} generators",
       [](const Json& r) { return in_suite(r, "horizontal") && !id_is(r, {"horizontal/control-flip-sigma"}); }},
      {7, "Jordanian sp_4 table and sp2n_map homomorphism", [](const Json& r) { return in_suite(r, "jordanian"); }},
      {8, "dimension claims", [](const Json& r) { return in_suite(r, "dims"); }},
      {9, "coproducts of F(1) and F(1)F(2) differ at t^1",
       [](const Json& r) { return id_is(r, {"cocycle/product-twist-distinctness"}); }},
      {10, "negative controls reject a corrupted twist and a flipped sigma(m)",
       [](const Json& r) { return id_is(r, {"cocycle/control-corrupted-twist", "horizontal/control-flip-sigma"}); }},
  };
  return list;
}

struct Tally {
  int pass = 0, fail = 0, skipped = 0;
  std::vector<std::string> failures;
};

int collect(const char* line, void* user) {
  static_cast<std::vector<Json>*>(user)->push_back(Json::parse(line));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> known;
  unsigned jobs = 0;
  bool verbose = false;
  CLI::App app{"acceptance criteria 1-10"};
  app.add_option("--known-failing", known, "criteria expected to fail")->check(CLI::Range(1, 10));
  app.add_option("--jobs", jobs, "worker threads");
  app.add_flag("-v,--verbose", verbose, "print every failing record");
  CLI11_PARSE(app, argc, argv);

  cartanh_session* s = nullptr;
  if (cartanh_session_new(&s) != CARTANH_OK) return 2;
  cartanh_set_param(s, CARTANH_PARAM_JOBS, jobs);
  std::vector<Json> records;
  auto t0 = std::chrono::steady_clock::now();
  cartanh_status st = cartanh_verify(s, "all", collect, &records, nullptr);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (st != CARTANH_OK && st != CARTANH_CHECK_FAILED) {
    std::cerr << "verify failed: " << cartanh_last_error(s) << "\n";
    cartanh_session_free(s);
    return 2;
  }
  cartanh_session_free(s);

  std::set<int> failing;
  for (const auto& c : criteria()) {
    Tally t;
    for (const auto& r : records) {
      if (!c.covers(r)) continue;
      const auto& status = r["status"].get_ref<const std::string&>();
      if (status == "pass") {
        ++t.pass;
      } else if (status == "skipped") {
        ++t.skipped;
      } else {
        ++t.fail;
        std::string w = r["witness"].is_string() ? r["witness"].get<std::string>() : "";
        t.failures.push_back(r["check_id"].get<std::string>() + " " + r["parameters"].dump() + ": " + w);
      }
    }
    // a criterion with nothing behind it does not pass
    bool ok = t.fail == 0 && t.pass > 0;
    if (!ok) failing.insert(c.id);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.pass
              << " passed, " << t.fail << " failed, " << t.skipped << " skipped)\n";
    std::size_t shown = verbose ? t.failures.size() : std::min<std::size_t>(t.failures.size(), 3);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    " << t.failures[i].substr(0, 400) << "\n";
    if (shown < t.failures.size()) std::cout << "    ... " << t.failures.size() - shown << " more\n";
  }
  std::cout << records.size() << " records in " << secs << " s\n";

  std::set<int> expected(known.begin(), known.end());
  if (failing == expected) {
    if (!expected.empty()) std::cout << "failing set matches --known-failing\n";
    return 0;
  }
  std::cout << "failing set differs from --known-failing\n";
  return 1;
}
