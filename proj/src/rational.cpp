// Copyright 2026 The kore Authors
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

#include "kore/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace kore {

namespace {

using Integer = boost::multiprecision::mpz_int;

Integer parse_integer(const std::string& text) {
  if (text.empty()) {
    throw std::invalid_argument("empty integer in rational literal");
  }
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("sign without digits in rational literal");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("non-digit '" + std::string(1, text[i]) +
                                  "' in rational literal \"" + text + "\"");
    }
  }
  return Integer(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(text));
  }
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator in rational literal \"" +
                                text + "\"");
  }
  // Constructing from an integer pair reduces to lowest terms with a
  // positive denominator; the string constructor would not.
  return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

}  // namespace kore
