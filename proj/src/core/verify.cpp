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


#include "cartanh/verify.hpp"

#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>

namespace cartanh {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

std::string to_json_line(const CheckRecord& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["context"] = r.context;
  j["parameters"] = r.parameters;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness.empty() ? nlohmann::ordered_json() : nlohmann::ordered_json(r.witness);
  j["wall_time_ms"] = r.wall_time_ms;
  return j.dump();
}

unsigned default_jobs() {
  if (const char* env = std::getenv("CARTANH_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

CheckRecord execute(const Check& c, bool timing) {
  CheckRecord r{c.id, c.context, c.parameters, CheckStatus::Fail, "", 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    CheckOutcome o = c.run();
    r.status = o.status;
    r.witness = std::move(o.witness);
  } catch (const std::exception& e) {
    r.status = CheckStatus::Fail;
    r.witness = std::string("exception: ") + e.what();
  }
  if (timing) {
    r.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  return r;
}

}  // namespace

void run_checks(const std::vector<Check>& checks, const SuiteConfig& cfg,
                const std::function<void(const CheckRecord&)>& sink) {
  const std::size_t n = checks.size();
  unsigned jobs = cfg.jobs ? cfg.jobs : default_jobs();
  if (jobs > n) jobs = static_cast<unsigned>(n);
  if (jobs <= 1) {
    for (const auto& c : checks) sink(execute(c, cfg.timing));
    return;
  }

  std::vector<std::optional<CheckRecord>> done(n);
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next = 0;

  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lk(mu);
        if (next >= n) return;
        i = next++;
      }
      CheckRecord r = execute(checks[i], cfg.timing);
      {
        std::lock_guard lk(mu);
        done[i] = std::move(r);
      }
      cv.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);

  for (std::size_t i = 0; i < n; ++i) {
    std::unique_lock lk(mu);
    cv.wait(lk, [&] { return done[i].has_value(); });
    CheckRecord r = std::move(*done[i]);
    done[i].reset();
    lk.unlock();
    sink(r);
  }
}

}  // namespace cartanh
