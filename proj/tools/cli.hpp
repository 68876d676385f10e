/*
   Copyright 2026 The hjrank Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef HJRANK_TOOLS_CLI_HPP
#define HJRANK_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hjrank::cli {

enum ExitCode : int {
    kOk = 0,
    kPartial = 1,               ///< missing class-group data, capped or undetermined results
    kInvalidInput = 2,          ///< bad flags, malformed files, parameters outside a family
    kCertificationFailure = 3,  ///< a certificate that must hold did not
};

/// Runs the command line `args` (args[0] is the program name); all output goes to the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hjrank::cli

#endif  // HJRANK_TOOLS_CLI_HPP
