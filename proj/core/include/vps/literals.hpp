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

#ifndef VPS_LITERALS_HPP_
#define VPS_LITERALS_HPP_

#include <string>
#include <vector>

#include "vps/distribution.hpp"
#include "vps/preferences.hpp"
#include "vps/vetoer.hpp"

namespace vps {

// `uniform:<lo>,<hi>`, `atoms:<x1>:<p1>,<x2>:<p2>,...`, `tilt:<base>;<lambda>`.
TypeDistribution ParseDistribution(const std::string& text);

// `linear`, `power:<gamma>`, `exp:<alpha>`.
ProposerPreferences ParsePreferences(const std::string& text);

// `binary:<low>,<high>,<prior_high>` or a two-atom `atoms:` literal.
BinaryTypeEnv ParseBinaryEnv(const std::string& text);

// Parses a real number; the whole string must be consumed.
double ParseReal(const std::string& text);

// `a,b,c` or `lo:hi:n` (n evenly spaced points, inclusive).
std::vector<double> ParseValueList(const std::string& text);

}  // namespace vps

#endif  // VPS_LITERALS_HPP_
