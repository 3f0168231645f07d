// Copyright 2026 The qsd authors
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

#ifndef QSD_ERRORS_HPP_
#define QSD_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qsd {

// Base class of every error thrown by this library. Messages name the
// violated condition and, where applicable, the offending index.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -------- linear algebra --------

// Input required to be Hermitian is not (beyond tolerance).
class NotHermitian : public Error {
 public:
  using Error::Error;
};

// Input required to be positive semidefinite has an eigenvalue below the
// allowed slack.
class NotPsd : public Error {
 public:
  using Error::Error;
};

// Eigensolver sweep budget exhausted before the off-diagonal mass converged.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

// Operation undefined on a (numerically) zero matrix.
class ZeroMatrix : public Error {
 public:
  using Error::Error;
};

// -------- validation --------

// A prior is non-positive or the priors do not sum to one.
class BadPrior : public Error {
 public:
  using Error::Error;
};

// A state fails a density-matrix invariant (hermiticity, positivity, trace).
class BadState : public Error {
 public:
  using Error::Error;
};

// Matrix dimensions disagree where they must match.
class DimMismatch : public Error {
 public:
  using Error::Error;
};

// Wrong number of states / priors / measurement elements for the operation.
class WrongArity : public Error {
 public:
  using Error::Error;
};

// -------- input / output --------

// File unreadable or syntactically/structurally invalid.
class ParseError : public Error {
 public:
  using Error::Error;
};

// -------- solvers and checks --------

// Ensemble is outside the commuting class the exact solver handles.
class NotCommuting : public Error {
 public:
  using Error::Error;
};

// A construction that must certify optimal failed its own certificate;
// indicates a numerical breakdown, not a user error.
class CertificateFailed : public Error {
 public:
  using Error::Error;
};

// A measurement presented as unambiguous has a conclusive element with
// nonzero overlap on a wrong state.
class NotUnambiguous : public Error {
 public:
  using Error::Error;
};

// A cross-check between two internally computed quantities failed; signals a
// numerics bug in this library rather than bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace qsd

#endif  // QSD_ERRORS_HPP_
