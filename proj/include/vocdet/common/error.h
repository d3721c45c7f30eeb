// include/vocdet/common/error.h

// Copyright 2026  vocdet authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef VOCDET_COMMON_ERROR_H_
#define VOCDET_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace vocdet {

// Base class for all toolkit errors. Subtypes let callers distinguish
// recoverable per-file failures from configuration mistakes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed container or header (e.g. a broken RIFF file).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Well-formed input using an encoding the toolkit does not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Numeric parameter outside its documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Matrix/vector dimension mismatch.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Not enough data, or data violating a precondition.
class DataError : public Error {
 public:
  using Error::Error;
};

// Empty input where at least one element is required.
class EmptyError : public Error {
 public:
  using Error::Error;
};

// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Filterbank too dense for the DFT bin resolution.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

// Invalid run configuration (bad flags, missing collections, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Model / feature fingerprint mismatch.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

// File system failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vocdet

#endif  // VOCDET_COMMON_ERROR_H_
