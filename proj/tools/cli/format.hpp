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

#ifndef VPS_TOOLS_CLI_FORMAT_HPP_
#define VPS_TOOLS_CLI_FORMAT_HPP_

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace vps::cli {

// 12 significant digits.
std::string Fmt(double x);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}
  void Header(const std::vector<std::string>& names);
  void Row(const std::vector<double>& values);
  void Row(const std::vector<std::string>& cells);

 private:
  std::ostream& os_;
};

// Runs body(i) for i in [0, n) on up to `jobs` threads.
void ParallelFor(int n, int jobs, const std::function<void(int)>& body);

}  // namespace vps::cli

#endif  // VPS_TOOLS_CLI_FORMAT_HPP_
