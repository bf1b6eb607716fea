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

#include "doxa/rational.hpp"

#include <cctype>

#include "doxa/errors.hpp"

namespace doxa {
namespace {

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool looks_like_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return is_integer_token(text);
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  return is_integer_token(num) && is_integer_token(den) && den.front() != '-';
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash == std::string_view::npos
                                             ? text.size()
                                             : slash);
  if (!is_integer_token(num)) {
    throw ValidationError("", "not a rational: \"" + std::string(text) + "\"");
  }
  BigInt p{std::string(num)};
  if (slash == std::string_view::npos) return Rational(p);

  std::string_view den = text.substr(slash + 1);
  if (!is_integer_token(den) || den.front() == '-') {
    throw ValidationError("", "not a rational: \"" + std::string(text) + "\"");
  }
  BigInt q{std::string(den)};
  if (q == 0) {
    throw ValidationError("", "zero denominator in \"" + std::string(text) +
                                  "\"");
  }
  return Rational(p, q);
}

std::string format_rational(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += "/";
    out += denominator(value).str();
  }
  return out;
}

}  // namespace doxa
