// Copyright 2026 The DFML Reader Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DFML_CLI_H_
#define DFML_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dfml {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the `dfml` command line. `args[0]` is the program name. Data goes to
// `out`, diagnostics to `err`.
//
//   dfml validate [--dfml] FILE
//   dfml inspect [--dfml] FILE
//   dfml read --dfml FILE --data FILE [--mode sequential|random]
//             [--select PATH#N] [--format text|json|csv]
//   dfml gen --dfml FILE [--mode sequential|random] [--select PATH#N]
//            [--target cpp] --out FILE
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace dfml

#endif  // DFML_CLI_H_
