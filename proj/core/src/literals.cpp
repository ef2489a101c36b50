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

#include "vps/literals.hpp"

#include <cstdlib>
#include <sstream>

#include "vps/error.hpp"

namespace vps {
namespace {

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

bool StartsWith(const std::string& s, const std::string& prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

double ParseReal(const std::string& text) {
  const std::string t = Trim(text);
  if (t.empty()) throw ParseError("expected a number, got ''");
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) {
    throw ParseError("expected a number, got '" + text + "'");
  }
  return v;
}

TypeDistribution ParseDistribution(const std::string& raw) {
  const std::string text = Trim(raw);
  try {
    if (StartsWith(text, "uniform:")) {
      const auto parts = Split(text.substr(8), ',');
      if (parts.size() != 2) throw ParseError("uniform: expected <lo>,<hi>");
      return TypeDistribution::Uniform(ParseReal(parts[0]), ParseReal(parts[1]));
    }
    if (StartsWith(text, "atoms:")) {
      std::vector<Atom> atoms;
      for (const std::string& item : Split(text.substr(6), ',')) {
        const auto xp = Split(item, ':');
        if (xp.size() != 2) throw ParseError("atoms: expected <point>:<prob>");
        atoms.push_back({ParseReal(xp[0]), ParseReal(xp[1])});
      }
      return TypeDistribution::Atoms(std::move(atoms));
    }
    if (StartsWith(text, "tilt:")) {
      const std::string body = text.substr(5);
      const auto pos = body.rfind(';');
      if (pos == std::string::npos) throw ParseError("tilt: expected <base>;<lambda>");
      return ParseDistribution(body.substr(0, pos))
          .Tilt(ParseReal(body.substr(pos + 1)));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid distribution '") + raw + "': " + e.what());
  }
  throw ParseError("unknown distribution literal '" + raw + "'");
}

ProposerPreferences ParsePreferences(const std::string& raw) {
  const std::string text = Trim(raw);
  try {
    if (text == "linear") return ProposerPreferences::Linear();
    if (StartsWith(text, "power:")) {
      return ProposerPreferences::Power(ParseReal(text.substr(6)));
    }
    if (StartsWith(text, "exp:")) {
      return ProposerPreferences::Exponential(ParseReal(text.substr(4)));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid loss '") + raw + "': " + e.what());
  }
  throw ParseError("unknown loss literal '" + raw + "'");
}

BinaryTypeEnv ParseBinaryEnv(const std::string& raw) {
  const std::string text = Trim(raw);
  try {
    if (StartsWith(text, "binary:")) {
      const auto parts = Split(text.substr(7), ',');
      if (parts.size() != 3) {
        throw ParseError("binary: expected <low>,<high>,<prior_high>");
      }
      return BinaryTypeEnv(ParseReal(parts[0]), ParseReal(parts[1]),
                           ParseReal(parts[2]));
    }
    if (StartsWith(text, "atoms:")) {
      const TypeDistribution d = ParseDistribution(text);
      const auto& atoms = d.atoms();
      if (atoms.size() != 2) throw ParseError("binary env: need exactly 2 atoms");
      return BinaryTypeEnv(atoms[0].point, atoms[1].point, atoms[1].prob);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid environment '") + raw + "': " + e.what());
  }
  throw ParseError("unknown environment literal '" + raw + "'");
}

std::vector<double> ParseValueList(const std::string& raw) {
  const std::string text = Trim(raw);
  const auto range = Split(text, ':');
  if (range.size() == 3) {
    const double lo = ParseReal(range[0]);
    const double hi = ParseReal(range[1]);
    const double n_real = ParseReal(range[2]);
    const int n = static_cast<int>(n_real);
    if (n != n_real || n < 1) throw ParseError("range: n must be a positive integer");
    if (n == 1) return {lo};
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    out.back() = hi;
    return out;
  }
  if (range.size() != 1) throw ParseError("expected a list or <lo>:<hi>:<n>");
  std::vector<double> out;
  for (const std::string& item : Split(text, ',')) out.push_back(ParseReal(item));
  if (out.empty()) throw ParseError("empty value list");
  return out;
}

}  // namespace vps
