//
// Copyright 2026 The ldpkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef LDPKIT_TOOLS_COMMANDS_H_
#define LDPKIT_TOOLS_COMMANDS_H_

#include <iosfwd>

namespace ldpkit::cli {

inline constexpr char kToolVersion[] = "0.1.0";
// Relative output paths resolve against this directory when it is set.
inline constexpr char kOutputDirEnv[] = "LDPKIT_OUTPUT_DIR";

// Exit codes: 0 success / certified, 2 audit not certified, 1 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotCertified = 2;

int Run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ldpkit::cli

#endif  // LDPKIT_TOOLS_COMMANDS_H_
