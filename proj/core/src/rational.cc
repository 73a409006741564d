// Copyright 2026 The symgames Authors
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

#include "symgames/rational.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <regex>
#include <string>

namespace symgames {
namespace {

void CheckSameShape(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrix shapes differ");
  }
}

mpz_class PowerOfTen(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

}  // namespace

Rational Fraction(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational ParseRational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  static const std::regex kFraction(R"(^([+-]?\d+)(?:/(\d+))?$)");
  static const std::regex kDecimal(R"(^([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?$)");
  std::smatch match;
  if (std::regex_match(s, match, kFraction)) {
    mpz_class num(match[1].str());
    mpz_class den(match[2].matched ? match[2].str() : std::string("1"));
    if (den == 0) throw InvalidArgument("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  if (std::regex_match(s, match, kDecimal) &&
      (match[2].length() > 0 || match[3].length() > 0)) {
    const std::string digits = match[2].str() + match[3].str();
    mpz_class mantissa(digits.empty() ? std::string("0") : digits);
    long exponent = -static_cast<long>(match[3].length());
    if (match[4].matched) {
      const long e = std::stol(match[4].str());
      if (std::abs(e) > 4096) throw InvalidArgument("exponent too large");
      exponent += e;
    }
    Rational q;
    if (exponent >= 0) {
      q = Rational(mantissa * PowerOfTen(static_cast<unsigned long>(exponent)));
    } else {
      q = Rational(mantissa, PowerOfTen(static_cast<unsigned long>(-exponent)));
    }
    q.canonicalize();
    if (match[1].str() == "-") q = -q;
    return q;
  }
  throw InvalidArgument("not a rational number: '" + s + "'");
}

std::string FormatRational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational ExactFromDouble(double value) {
  if (!std::isfinite(value)) throw InvalidArgument("non-finite value");
  return Rational(value);
}

RealMatrix ToReal(const RationalMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  }
  return out;
}

std::vector<double> ToReal(std::span<const Rational> v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_d());
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  CheckSameShape(a, b);
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  CheckSameShape(a, b);
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = s * m(i, j);
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& m) { return Rational(-1) * m; }

RationalMatrix Shifted(const RationalMatrix& m, const Rational& shift) {
  RationalMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) + shift;
  }
  return out;
}

bool IsSymmetric(const RationalMatrix& m) {
  if (!m.square()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

bool IsSkewSymmetric(const RationalMatrix& m) {
  if (!m.square()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i; j < m.cols(); ++j) {
      if (m(i, j) != -m(j, i)) return false;
    }
  }
  return true;
}

Rational MinEntry(const RationalMatrix& m) {
  if (m.data().empty()) throw DimensionError("empty matrix");
  return *std::min_element(m.data().begin(), m.data().end());
}

Rational MaxEntry(const RationalMatrix& m) {
  if (m.data().empty()) throw DimensionError("empty matrix");
  return *std::max_element(m.data().begin(), m.data().end());
}

std::vector<double> Multiply(const RealMatrix& m, std::span<const double> x) {
  if (static_cast<int>(x.size()) != m.cols()) {
    throw DimensionError("matrix-vector shape mismatch");
  }
  std::vector<double> y(m.rows(), 0.0);
  for (int i = 0; i < m.rows(); ++i) {
    double acc = 0.0;
    for (int j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<double> MultiplyTransposed(const RealMatrix& m,
                                       std::span<const double> x) {
  if (static_cast<int>(x.size()) != m.rows()) {
    throw DimensionError("matrix-vector shape mismatch");
  }
  std::vector<double> y(m.cols(), 0.0);
  for (int j = 0; j < m.cols(); ++j) {
    double acc = 0.0;
    for (int i = 0; i < m.rows(); ++i) acc += m(i, j) * x[i];
    y[j] = acc;
  }
  return y;
}

std::vector<Rational> Multiply(const RationalMatrix& m,
                               std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != m.cols()) {
    throw DimensionError("matrix-vector shape mismatch");
  }
  std::vector<Rational> y(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (x[j] != 0) y[i] += m(i, j) * x[j];
    }
  }
  return y;
}

std::vector<Rational> MultiplyTransposed(const RationalMatrix& m,
                                         std::span<const Rational> x) {
  if (static_cast<int>(x.size()) != m.rows()) {
    throw DimensionError("matrix-vector shape mismatch");
  }
  std::vector<Rational> y(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) y[j] += m(i, j) * x[i];
  }
  return y;
}

double Dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionError("dot product size mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw DimensionError("dot product size mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace symgames
