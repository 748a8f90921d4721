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


#ifndef GAMMAQ_TOOLS_CLI_REPORT_HPP
#define GAMMAQ_TOOLS_CLI_REPORT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "gammaq/errors.hpp"

namespace gammaq::cli {

using Json = nlohmann::ordered_json;

extern const char* const kVersion;

// Ordered by severity.
enum class Status { kPass, kWarn, kResourceExceeded, kFail };

std::string status_name(Status s);
Status worse(Status a, Status b);
int exit_code(Status overall);

struct Record {
  std::string command;
  Json parameters = Json::object();
  std::string anchor;
  Status status = Status::kPass;
  Json payload = Json::object();
  std::optional<std::uint64_t> seed;
};

std::string serialize(const Record& record);

class Reporter {
 public:
  explicit Reporter(std::ostream& out) : out_(out) {}
  void emit(const Record& record);
  Status overall() const { return overall_; }
  std::size_t count() const { return count_; }

 private:
  std::ostream& out_;
  Status overall_ = Status::kPass;
  std::size_t count_ = 0;
};

// A unit of work: the header fields are fixed up front so that a record can
// still be emitted when the body throws.
struct Task {
  Record header;
  std::function<void(Record&, Budget&)> body;
};

// Runs every task with its own budget on `jobs` worker threads and emits the
// records in submission order.
void run_tasks(const std::vector<Task>& tasks, int jobs, std::uint64_t budget, Reporter& reporter);

// Runs one task on the calling thread, translating library errors.
Record run_task(const Task& task, std::uint64_t budget);

Json to_json(const std::vector<std::int64_t>& v);
std::string join(const std::vector<std::int64_t>& v, char sep = ',');

}  // namespace gammaq::cli

#endif  // GAMMAQ_TOOLS_CLI_REPORT_HPP
