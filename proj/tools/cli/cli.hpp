// Copyright 2026 The VPS Authors
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

#ifndef VPS_TOOLS_CLI_CLI_HPP_
#define VPS_TOOLS_CLI_CLI_HPP_

#include <iosfwd>
#include <string>

namespace vps::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitCheckFailure = 3;

// Flags shared by the subcommands. Empty strings and zeros mean "use the
// command's default".
struct Options {
  bool json = false;
  std::string out;
  int jobs = 1;
  int grid = 0;
  double tol = 1e-6;
  std::string dist;
  std::string loss;
  std::string env;
  std::string mu0;
};

// Entry point behind the `vps` executable; returns the process exit code.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

int CmdSolve(const std::string& model, const std::string& timing,
             const std::string& instance, const std::string& loss,
             const Options& opts, std::ostream& out);
int CmdSweep(const std::string& parameter, const std::string& values,
             const Options& opts, std::ostream& out);
int CmdFigure(int id, const Options& opts, std::ostream& out);
int CmdOracle(const std::string& model, const std::string& instance,
              const std::string& loss, const Options& opts, std::ostream& out);

}  // namespace vps::cli

#endif  // VPS_TOOLS_CLI_CLI_HPP_
