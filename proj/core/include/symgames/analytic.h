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

#ifndef SYMGAMES_ANALYTIC_H_
#define SYMGAMES_ANALYTIC_H_

#include <array>
#include <string>

#include "symgames/errors.h"
#include "symgames/game.h"

namespace symgames {

// p + q√3 with rational p, q: exact arithmetic in ℚ(√3).
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(int p) : p_(p) {}  // NOLINT: integers embed implicitly
  QuadSurd(Rational p) : p_(std::move(p)) {}  // NOLINT
  QuadSurd(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static QuadSurd Sqrt3() { return {0, 1}; }

  const Rational& rational_part() const { return p_; }
  const Rational& surd_part() const { return q_; }
  bool is_rational() const { return q_ == 0; }

  // −1, 0 or +1, decided exactly.
  int sign() const;
  double ToDouble() const;
  std::string ToString() const;

  QuadSurd& operator+=(const QuadSurd& o);
  QuadSurd& operator-=(const QuadSurd& o);
  QuadSurd& operator*=(const QuadSurd& o);
  QuadSurd& operator/=(const QuadSurd& o);

  friend QuadSurd operator+(QuadSurd a, const QuadSurd& b) { return a += b; }
  friend QuadSurd operator-(QuadSurd a, const QuadSurd& b) { return a -= b; }
  friend QuadSurd operator*(QuadSurd a, const QuadSurd& b) { return a *= b; }
  friend QuadSurd operator/(QuadSurd a, const QuadSurd& b) { return a /= b; }
  friend QuadSurd operator-(const QuadSurd& a) { return {-a.p_, -a.q_}; }

  friend bool operator==(const QuadSurd& a, const QuadSurd& b) {
    return a.p_ == b.p_ && a.q_ == b.q_;
  }
  friend bool operator<(const QuadSurd& a, const QuadSurd& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const QuadSurd& a, const QuadSurd& b) { return b < a; }
  friend bool operator<=(const QuadSurd& a, const QuadSurd& b) {
    return !(b < a);
  }
  friend bool operator>=(const QuadSurd& a, const QuadSurd& b) {
    return !(a < b);
  }

 private:
  Rational p_ = 0;
  Rational q_ = 0;
};

using SurdMatrix = Matrix<QuadSurd>;

template <typename T>
struct ZeroSum2x2 {
  T value;
  std::array<T, 2> row;  // minimizer
  std::array<T, 2> col;  // maximizer
};

// Unique equilibrium of min_x max_z ⟨x, Az⟩ for a 2×2 A with
// (A₁₁ − A₁₂)(A₂₂ − A₂₁) > 0 and (A₁₁ − A₂₁)(A₂₂ − A₁₂) > 0.
template <typename T>
ZeroSum2x2<T> Solve2x2(const Matrix<T>& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw DimensionError("closed form needs a 2x2 matrix");
  }
  const T& a11 = a(0, 0);
  const T& a12 = a(0, 1);
  const T& a21 = a(1, 0);
  const T& a22 = a(1, 1);
  if (!((a11 - a12) * (a22 - a21) > T(0)) ||
      !((a11 - a21) * (a22 - a12) > T(0))) {
    throw DegenerateGame("2x2 game violates the strict mixing conditions");
  }
  const T d = a11 - a12 - a21 + a22;
  return {(a11 * a22 - a12 * a21) / d,
          {(a22 - a21) / d, (a11 - a12) / d},
          {(a22 - a12) / d, (a11 - a21) / d}};
}

// Three-player team game on two actions each: x (0) and y (1) minimize,
// z (2) maximizes the shared payoff
//          (x,y)=(1,1)  (1,2)   (2,1)    (2,2)
//   z = 1      1          3     99/100  −1/100
//   z = 2    9/10      −1/10      1        3
NormalFormGame IrrationalGame();

// Exact payoff u(x, y, z) for pure actions (0-indexed).
Rational IrrationalPayoff(int x, int y, int z);

using SurdStrategy = std::array<QuadSurd, 2>;

struct SurdProfile {
  SurdStrategy x;
  SurdStrategy y;
  SurdStrategy z;
};

// x* = ((3 − √3)/6, (3 + √3)/6), y* = ((611 − 9√3)/600, (9√3 − 11)/600),
// z* = ((3 + √3)/6, (3 − √3)/6).
SurdProfile IrrationalEquilibrium();

// Exact payoff of each pure action of `player` against the others.
SurdStrategy IrrationalActionValues(const SurdProfile& profile, int player);

MixedProfile ToMixed(const SurdProfile& profile);

// A(y) with rows indexed by x and columns by z, for y = (1 − y₂, y₂).
template <typename T>
Matrix<T> ValueCurveMatrix(const T& y2) {
  if (y2 < T(0) || y2 > T(1)) throw InvalidArgument("y2 must lie in [0, 1]");
  Matrix<T> a(2, 2);
  a(0, 0) = T(1) + T(2) * y2;
  a(0, 1) = T(Fraction(9, 10)) - y2;
  a(1, 0) = T(Fraction(99, 100)) - y2;
  a(1, 1) = T(1) + T(2) * y2;
  return a;
}

// v(y₂) = (109 + 5890 y₂ + 3000 y₂²)/(110 + 6000 y₂), the value of A(y).
template <typename T>
T TeamValueCurve(const T& y2) {
  if (y2 < T(0) || y2 > T(1)) throw InvalidArgument("y2 must lie in [0, 1]");
  return (T(109) + T(5890) * y2 + T(3000) * y2 * y2) / (T(110) + T(6000) * y2);
}

// y₂* = (9√3 − 11)/600, the minimizer of v on [0, 1].
QuadSurd ValueCurveMinimizer();

}  // namespace symgames

#endif  // SYMGAMES_ANALYTIC_H_
