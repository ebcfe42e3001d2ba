// Copyright 2026 The rentfair Authors
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

#include "rentfair/rational.hpp"

#include <algorithm>
#include <cctype>

namespace rentfair {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

BigInt parse_digits(std::string_view s) {
  BigInt out = 0;
  for (char c : s) {
    out *= 10;
    out += c - '0';
  }
  return out;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw std::invalid_argument("rational with denominator 0");
  // Division normalizes the sign and reduces to lowest terms exactly.
  value_ = boost::multiprecision::cpp_rational(num);
  value_ /= boost::multiprecision::cpp_rational(den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::from_string(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) bad_rational(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_rational(text);

  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    BigInt d = parse_digits(den);
    if (d.is_zero()) bad_rational(text);
    out = Rational(parse_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_rational(text);
    if (!whole.empty() && !all_digits(whole)) bad_rational(text);
    if (!frac.empty() && !all_digits(frac)) bad_rational(text);
    BigInt scaled = whole.empty() ? BigInt(0) : parse_digits(whole);
    BigInt den = 1;
    for (char c : frac) {
      scaled *= 10;
      scaled += c - '0';
      den *= 10;
    }
    out = Rational(scaled, den);
  } else {
    if (!all_digits(s)) bad_rational(text);
    out = Rational(parse_digits(s));
  }
  return negative ? -out : out;
}

std::string Rational::to_string() const {
  std::string out = numerator().str();
  if (!is_integer()) {
    out += '/';
    out += denominator().str();
  }
  return out;
}

}  // namespace rentfair
