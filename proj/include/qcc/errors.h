// Copyright 2026 The qccdec Authors
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

#ifndef QCC_ERRORS_H
#define QCC_ERRORS_H

#include <stdexcept>
#include <string>

namespace qcc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different fields (GF(2) vs GF(4)).
class FieldMismatchError : public Error {
   public:
    using Error::Error;
};

/// A matrix does not have the rank an operation requires.
class RankError : public Error {
   public:
    using Error::Error;
};

/// An intermediate polynomial exceeded the configured degree cap.
class DegreeCapError : public Error {
   public:
    using Error::Error;
};

/// Malformed textual input (spec files, polynomial strings, hex syndromes).
class ParseError : public Error {
   public:
    using Error::Error;
};

/// Frame or stream lengths that do not fit the code structure.
class LengthError : public Error {
   public:
    using Error::Error;
};

}  // namespace qcc

#endif
