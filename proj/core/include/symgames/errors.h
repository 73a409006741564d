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

#ifndef SYMGAMES_ERRORS_H_
#define SYMGAMES_ERRORS_H_

#include <stdexcept>
#include <string>

namespace symgames {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of games, profiles or matrices disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An enumeration or expansion would exceed its configured cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

// An argument is outside the range an operation accepts.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A numerical routine failed to converge or produced non-finite values.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what, double residual = 0.0)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// An input certificate does not establish what an operation requires.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A closed form was asked for outside the strict inequalities it needs.
class DegenerateGame : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A proven bound failed on concrete data. Seeing one means a bug.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

// The operation is not defined for the problem's domain.
class UnsupportedDomain : public Error {
 public:
  using Error::Error;
};

}  // namespace symgames

#endif  // SYMGAMES_ERRORS_H_
