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

#ifndef VPS_ERROR_HPP_
#define VPS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace vps {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The combination of inputs is outside the supported model.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// A modelling assumption required by the operation does not hold.
class AssumptionError : public Error {
 public:
  using Error::Error;
};

// Conditioning on an event of (numerically) zero probability.
class EmptyTailError : public Error {
 public:
  using Error::Error;
};

// Malformed textual literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace vps

#endif  // VPS_ERROR_HPP_
