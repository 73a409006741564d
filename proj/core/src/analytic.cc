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

#include "symgames/analytic.h"

#include <cmath>
#include <vector>

namespace symgames {
namespace {

int RationalSign(const Rational& r) { return sgn(r); }

}  // namespace

int QuadSurd::sign() const {
  const int sp = RationalSign(p_);
  const int sq = RationalSign(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: the larger of p² and 3q² wins.
  const Rational lhs = p_ * p_;
  const Rational rhs = 3 * q_ * q_;
  return lhs > rhs ? sp : sq;
}

double QuadSurd::ToDouble() const {
  return p_.get_d() + q_.get_d() * std::sqrt(3.0);
}

std::string QuadSurd::ToString() const {
  if (q_ == 0) return FormatRational(p_);
  std::string out;
  if (p_ != 0) out = FormatRational(p_) + (q_ > 0 ? " + " : " - ");
  else if (q_ < 0) out = "-";
  const Rational mag = abs(q_);
  if (mag != 1) out += FormatRational(mag) + "*";
  return out + "sqrt(3)";
}

QuadSurd& QuadSurd::operator+=(const QuadSurd& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

QuadSurd& QuadSurd::operator-=(const QuadSurd& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

QuadSurd& QuadSurd::operator*=(const QuadSurd& o) {
  Rational p = p_ * o.p_ + 3 * q_ * o.q_;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

QuadSurd& QuadSurd::operator/=(const QuadSurd& o) {
  const Rational norm = o.p_ * o.p_ - 3 * o.q_ * o.q_;
  if (norm == 0) throw InvalidArgument("division by zero in Q(sqrt 3)");
  *this *= QuadSurd(o.p_ / norm, -o.q_ / norm);
  return *this;
}

Rational IrrationalPayoff(int x, int y, int z) {
  static const Rational kTable[2][2][2] = {
      // [x][y][z]
      {{Rational(1), Fraction(9, 10)}, {Rational(3), Fraction(-1, 10)}},
      {{Fraction(99, 100), Rational(1)}, {Fraction(-1, 100), Rational(3)}},
  };
  if (x < 0 || x > 1 || y < 0 || y > 1 || z < 0 || z > 1) {
    throw InvalidArgument("irrational game actions are 0 or 1");
  }
  return kTable[x][y][z];
}

NormalFormGame IrrationalGame() {
  std::vector<Rational> u(8);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) u[x * 4 + y * 2 + z] = IrrationalPayoff(x, y, z);
    }
  }
  return NormalFormGame(
      {2, 2, 2},
      {Orientation::kMinimize, Orientation::kMinimize, Orientation::kMaximize},
      {u, u, u}, TeamPartition{{0, 1}, {2}});
}

SurdProfile IrrationalEquilibrium() {
  const QuadSurd sixth(Fraction(1, 2), Fraction(-1, 6));  // (3 − √3)/6
  const QuadSurd other(Fraction(1, 2), Fraction(1, 6));   // (3 + √3)/6
  const QuadSurd y1(Fraction(611, 600), Fraction(-9, 600));
  const QuadSurd y2(Fraction(-11, 600), Fraction(9, 600));
  return {{sixth, other}, {y1, y2}, {other, sixth}};
}

SurdStrategy IrrationalActionValues(const SurdProfile& profile, int player) {
  if (player < 0 || player > 2) throw InvalidArgument("player out of range");
  const SurdStrategy* s[3] = {&profile.x, &profile.y, &profile.z};
  SurdStrategy values = {QuadSurd(0), QuadSurd(0)};
  int a[3];
  for (a[0] = 0; a[0] < 2; ++a[0]) {
    for (a[1] = 0; a[1] < 2; ++a[1]) {
      for (a[2] = 0; a[2] < 2; ++a[2]) {
        QuadSurd w = IrrationalPayoff(a[0], a[1], a[2]);
        for (int q = 0; q < 3; ++q) {
          if (q != player) w *= (*s[q])[a[q]];
        }
        values[a[player]] += w;
      }
    }
  }
  return values;
}

MixedProfile ToMixed(const SurdProfile& profile) {
  MixedProfile out;
  for (const SurdStrategy* s : {&profile.x, &profile.y, &profile.z}) {
    out.emplace_back(std::vector<double>{(*s)[0].ToDouble(), (*s)[1].ToDouble()});
  }
  return out;
}

QuadSurd ValueCurveMinimizer() {
  return {Fraction(-11, 600), Fraction(9, 600)};
}

}  // namespace symgames
