// Copyright 2026 The crosscover Authors
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

#include "crosscover/rational.hpp"

#include <cctype>
#include <cmath>

#include "crosscover/error.hpp"

namespace crosscover {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0)
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::Parse, "malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), q(std::string(den), 10);
  if (q == 0)
    throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  return Rational(mpq_class(n, q));
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value))
    throw Error(ErrorCode::InvalidArgument, "non-finite value has no rational form");
  return Rational(mpq_class(value));
}

}  // namespace crosscover
