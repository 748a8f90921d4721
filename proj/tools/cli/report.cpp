// Copyright 2026 The gammaq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace gammaq::cli {

#ifndef GAMMAQ_VERSION
#define GAMMAQ_VERSION "0.0.0"
#endif

const char* const kVersion = GAMMAQ_VERSION;

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kWarn:
      return "warn";
    case Status::kResourceExceeded:
      return "resource_exceeded";
    case Status::kFail:
      return "fail";
  }
  return "fail";
}

Status worse(Status a, Status b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

int exit_code(Status overall) {
  switch (overall) {
    case Status::kFail:
      return 1;
    case Status::kResourceExceeded:
      return 3;
    default:
      return 0;
  }
}

std::string serialize(const Record& record) {
  Json j;
  j["command"] = record.command;
  j["parameters"] = record.parameters;
  j["anchor"] = record.anchor;
  j["status"] = status_name(record.status);
  j["payload"] = record.payload;
  if (record.seed)
    j["seed"] = *record.seed;
  else
    j["seed"] = nullptr;
  j["version"] = kVersion;
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

void Reporter::emit(const Record& record) {
  out_ << serialize(record) << '\n';
  out_.flush();
  overall_ = worse(overall_, record.status);
  ++count_;
}

Record run_task(const Task& task, std::uint64_t budget_limit) {
  Record r = task.header;
  Budget budget(budget_limit);
  try {
    task.body(r, budget);
  } catch (const ResourceError& e) {
    r.status = Status::kResourceExceeded;
    r.payload["error"] = e.what();
    r.payload["processed"] = e.processed();
  } catch (const IntegrityError& e) {
    r.status = Status::kFail;
    r.payload["error"] = std::string("integrity: ") + e.what();
  } catch (const PreconditionError& e) {
    r.status = Status::kFail;
    r.payload["error"] = std::string("precondition: ") + e.what();
  }
  return r;
}

void run_tasks(const std::vector<Task>& tasks, int jobs, std::uint64_t budget, Reporter& reporter) {
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                      std::max<std::size_t>(tasks.size(), 1));
  if (workers == 1) {
    for (const Task& t : tasks) reporter.emit(run_task(t, budget));
    return;
  }
  std::vector<std::optional<Record>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < tasks.size(); k = next++) results[k] = run_task(tasks[k], budget);
    });
  }
  for (auto& th : pool) th.join();
  for (auto& r : results) reporter.emit(*r);
}

Json to_json(const std::vector<std::int64_t>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

std::string join(const std::vector<std::int64_t>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace gammaq::cli
