// Copyright 2026 The onegate Authors.
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

#ifndef ONEGATE_TOOLS_CLI_H_
#define ONEGATE_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace onegate::cli {

// Exit codes: 0 success, 1 negative result (affine or trivial gate,
// inequivalent circuits), 2 input error (usage, parse, IO).
struct CommandOutcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

// `args` excludes the program name. Progress of long commands is streamed
// to `progress` when given.
CommandOutcome run(const std::vector<std::string>& args,
                   std::ostream* progress = nullptr);

}  // namespace onegate::cli

#endif  // ONEGATE_TOOLS_CLI_H_
