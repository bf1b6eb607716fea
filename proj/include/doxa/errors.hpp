// Copyright 2026 The Doxa Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace doxa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural constraint on an input value does not hold.
class ValidationError : public Error {
 public:
  ValidationError(std::string path, const std::string& constraint)
      : Error(path.empty() ? constraint : path + ": " + constraint),
        path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a hard enumeration cap.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

// A derived state space would exceed the configured size cap.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class GenerationExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace doxa
