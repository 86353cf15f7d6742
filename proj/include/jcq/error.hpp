// Copyright 2026 The jcq Authors. All Rights Reserved.
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

#pragma once

#include <stdexcept>
#include <string>

namespace jcq {

// Base class for every rejection raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A matrix required to be Hermitian is not, beyond tolerance.
class NonHermitianError : public Error {
 public:
  NonHermitianError(const std::string& what, double asymmetry)
      : Error(what), asymmetry_(asymmetry) {}
  double asymmetry() const { return asymmetry_; }

 private:
  double asymmetry_;
};

// An eigenvalue fell below the allowed negative round-off.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

// Cavity population outside {0, 1} photons is too large to reduce a
// cavity to a qubit.
class LeakageError : public Error {
 public:
  LeakageError(const std::string& what, double leaked)
      : Error(what), leaked_(leaked) {}
  double leaked_probability() const { return leaked_; }

 private:
  double leaked_;
};

// A 4x4 matrix is not a valid two-qubit density matrix.
class InvalidDensityError : public Error {
 public:
  enum class Property { trace, hermiticity, positivity, shape };
  InvalidDensityError(const std::string& what, Property p)
      : Error(what), property_(p) {}
  Property property() const { return property_; }

 private:
  Property property_;
};

// A density matrix has an entry off the X pattern above tolerance.
class NotXFormError : public Error {
 public:
  NotXFormError(const std::string& what, double magnitude, int row, int col)
      : Error(what), magnitude_(magnitude), row_(row), col_(col) {}
  double magnitude() const { return magnitude_; }
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  double magnitude_;
  int row_;
  int col_;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

}  // namespace jcq
