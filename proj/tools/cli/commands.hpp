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


#ifndef GAMMAQ_TOOLS_CLI_COMMANDS_HPP
#define GAMMAQ_TOOLS_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "report.hpp"

namespace gammaq::cli {

enum class Size { kSmoke, kDesk, kExtended };

Size size_from_name(const std::string& name);
std::string size_name(Size size);

// smoke 10^6, desk 10^8, extended 10^9; GAMMAQ_BUDGET overrides all three.
std::uint64_t default_budget(Size size);

// suite: groups, bruhat, kloosterman, latcount, ffchar or all.
std::vector<Task> verify_tasks(const std::string& suite, Size size);

struct ExperimentGrid {
  std::vector<int> n;
  std::vector<std::int64_t> q, T, p, alpha, beta;
  std::string epsilon = "1/5";
  std::string norm = "max";
  std::uint64_t seed = 1;
  std::uint64_t sample_size = 10'000;
};

// Fills unset axes with the defaults of the experiment kind.
ExperimentGrid with_defaults(const std::string& kind, ExperimentGrid grid);

// Writes a CSV header and one row per grid point, in lexicographic grid order,
// flushing each row; the returned task summarizes the grid.
Task experiment_task(const std::string& kind, const ExperimentGrid& grid, std::ostream& csv);

std::string csv_field(const std::string& s);

}  // namespace gammaq::cli

#endif  // GAMMAQ_TOOLS_CLI_COMMANDS_HPP
