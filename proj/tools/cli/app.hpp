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


#ifndef GAMMAQ_TOOLS_CLI_APP_HPP
#define GAMMAQ_TOOLS_CLI_APP_HPP

#include <iosfwd>

namespace gammaq::cli {

// Exit codes: 0 pass or warn, 1 fail, 2 usage, 3 resource.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gammaq::cli

#endif  // GAMMAQ_TOOLS_CLI_APP_HPP
