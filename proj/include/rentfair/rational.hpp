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

#ifndef RENTFAIR_RATIONAL_HPP
#define RENTFAIR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rentfair {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; every operation is exact (no rounding anywhere).
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(n) {}                // NOLINT(runtime/explicit)
  Rational(long long n) : value_(n) {}          // NOLINT(runtime/explicit)
  Rational(const BigInt& n) : value_(n) {}      // NOLINT(runtime/explicit)
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p", "p/q", and plain decimal strings like "-3.25". Decimals are
  // scaled by powers of ten, never routed through binary floating point.
  static Rational from_string(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }

  bool is_zero() const { return value_.is_zero(); }
  bool is_negative() const { return value_ < 0; }
  bool is_positive() const { return value_ > 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational operator-() const { return Rational(Raw{}, -value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p" when integral, "p/q" otherwise.
  std::string to_string() const;

  // Lossy; for diagnostics and timing summaries only.
  double to_double() const {
    return static_cast<double>(value_.convert_to<double>());
  }

 private:
  struct Raw {};
  Rational(Raw, boost::multiprecision::cpp_rational v) : value_(std::move(v)) {}

  boost::multiprecision::cpp_rational value_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace rentfair

#endif  // RENTFAIR_RATIONAL_HPP
