// Copyright 2026 The jctherm Authors
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

#ifndef JCTHERM_CLI_H
#define JCTHERM_CLI_H

#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jctherm/grid.h"

namespace jctherm {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kExitIo = 3;

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by parse_args for --help; what() is the usage text.
class HelpRequested : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    /// Flag name without dashes -> raw value, defaults filled in.
    std::map<std::string, std::string> parameters;
    std::string output_path;
    std::string svg_path;
    int workers = 1;
    std::uint64_t seed = 0;
};

/// "start:stop:step", "start:stop" (step 1) or a single number. Throws
/// UsageError.
AxisRange parse_range(const std::string &text);

/// args excludes the program name. Throws UsageError or HelpRequested.
RunConfig parse_args(const std::vector<std::string> &args);

/// Returns the process exit status.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// parse_args + run with the exit-status mapping; what main() calls.
int cli_main(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace jctherm

#endif
