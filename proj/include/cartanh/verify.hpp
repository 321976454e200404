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

#ifndef CARTANH_VERIFY_HPP
#define CARTANH_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cartanh {

enum class CheckStatus { Pass, Fail, Skipped };

std::string to_string(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::string witness;  // first failing degree or term; empty on pass
};

struct CheckRecord {
  std::string check_id;
  std::string context;
  nlohmann::json parameters = nlohmann::json::object();
  CheckStatus status = CheckStatus::Pass;
  std::string witness;
  double wall_time_ms = 0;
};

/// One line of the JSON Lines report; witness is null when empty.
std::string to_json_line(const CheckRecord& r);

/// Overrides narrow a suite to a single context; unset fields keep the
/// suite's default grid.
struct SuiteConfig {
  std::optional<int> n, k, m, N;
  std::optional<std::uint32_t> p;
  std::optional<long> q;
  std::uint64_t seed = 20260;
  bool timing = false;
  unsigned jobs = 0;  // 0: default_jobs()
};

struct Check {
  std::string id;
  std::string context;
  nlohmann::json parameters = nlohmann::json::object();
  std::function<CheckOutcome()> run;
};

/// all, cocycle, char0-closed-forms, modular-reduction, utq-hopf, horizontal,
/// jordanian, dims.
const std::vector<std::string>& suite_names();

/// Throws InvalidContext for an unknown suite or a bad override.
std::vector<Check> build_suite(const std::string& name, const SuiteConfig& cfg);

/// Runs checks on a worker pool; `sink` sees records in input order, from the
/// calling thread. A check that throws is recorded as a failure.
void run_checks(const std::vector<Check>& checks, const SuiteConfig& cfg,
                const std::function<void(const CheckRecord&)>& sink);

/// CARTANH_JOBS when set to a positive integer, else the hardware concurrency.
unsigned default_jobs();

}  // namespace cartanh

#endif  // CARTANH_VERIFY_HPP
