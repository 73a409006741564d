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

#ifndef SYMGAMES_RATIONAL_H_
#define SYMGAMES_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symgames/errors.h"

namespace symgames {

using Rational = mpq_class;

// Accepts "p/q", integers and plain decimals ("0.25", "-1e-3"); decimals are
// converted exactly, so "0.1" is 1/10 rather than the nearest double.
// num/den in lowest terms. mpq_class(num, den) alone does not reduce, and
// GMP arithmetic requires reduced operands.
Rational Fraction(long num, long den);

Rational ParseRational(std::string_view text);

// Canonical "p/q" form, or "p" for integers.
std::string FormatRational(const Rational& value);

// Exact binary value of a finite double.
Rational ExactFromDouble(double value);

inline double ToDouble(const Rational& value) { return value.get_d(); }

// Dense row-major matrix. Used with Rational for stored payoffs and with
// double for evaluation.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill = T(0))
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
              fill) {
    if (rows < 0 || cols < 0) throw DimensionError("negative matrix extent");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_) {
        throw DimensionError("ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix Identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const T& operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }

  std::span<const T> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  const std::vector<T>& data() const { return data_; }

  Matrix Transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

RealMatrix ToReal(const RationalMatrix& m);
std::vector<double> ToReal(std::span<const Rational> v);

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& m);
RationalMatrix operator-(const RationalMatrix& m);

// Adds `shift` to every entry.
RationalMatrix Shifted(const RationalMatrix& m, const Rational& shift);

bool IsSymmetric(const RationalMatrix& m);
bool IsSkewSymmetric(const RationalMatrix& m);
Rational MinEntry(const RationalMatrix& m);
Rational MaxEntry(const RationalMatrix& m);

// y = m x, summing in column order.
std::vector<double> Multiply(const RealMatrix& m, std::span<const double> x);
// y = mᵀ x, summing in row order.
std::vector<double> MultiplyTransposed(const RealMatrix& m,
                                       std::span<const double> x);
std::vector<Rational> Multiply(const RationalMatrix& m,
                               std::span<const Rational> x);
std::vector<Rational> MultiplyTransposed(const RationalMatrix& m,
                                         std::span<const Rational> x);

double Dot(std::span<const double> a, std::span<const double> b);
Rational Dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace symgames

#endif  // SYMGAMES_RATIONAL_H_
