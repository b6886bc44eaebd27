// Copyright 2026 The cyclo Authors
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

#ifndef CYCLO_ERRORS_HPP
#define CYCLO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclo {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A polynomial division that was required to be exact left a remainder.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

/// Index outside the supported domain (n < 2, even where odd is required, ...).
class UnsupportedIndex : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// A Sturm query endpoint is itself a root.
class EndpointRoot : public Error {
 public:
  using Error::Error;
};

class IndexNotCoprime : public Error {
 public:
  using Error::Error;
};

/// A repeated real root was found where only simple roots are allowed.
class SimplicityViolated : public Error {
 public:
  using Error::Error;
};

class NotNarrow : public Error {
 public:
  using Error::Error;
};

/// Root count differs from 2^k - 1, so roots cannot be paired with predictions.
class CountMismatch : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (polynomials, corpora, index lists).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always indicates a bug or a broken identity.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace cyclo

#endif  // CYCLO_ERRORS_HPP
