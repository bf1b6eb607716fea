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

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace doxa {

// All probability and decision arithmetic is exact; equality checks carry
// zero tolerance. cpp_rational keeps values in lowest terms with a positive
// denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p" or "p/q" with optional leading '-' on p and q > 0.
// Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms with q > 0; plain "p" when q == 1.
std::string format_rational(const Rational& value);

// True when text matches the grammar accepted by parse_rational.
bool looks_like_rational(std::string_view text);

}  // namespace doxa
