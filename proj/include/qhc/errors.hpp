// Copyright 2026 The QHC Synth Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace qhc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

class InvalidParameter : public Error {
  public:
    using Error::Error;
};

class InvalidOrbit : public Error {
  public:
    using Error::Error;
};

class NonUnitaryError : public Error {
  public:
    using Error::Error;
};

// Synthesis failures.
class NotSymmetric : public Error {
  public:
    using Error::Error;
};

class InitialStateMismatch : public Error {
  public:
    using Error::Error;
};

class NonEmbeddable : public Error {
  public:
    using Error::Error;
};

// Document ingestion.
class ParseError : public Error {
  public:
    using Error::Error;
};

class ValidationError : public Error {
  public:
    using Error::Error;
};

} // namespace qhc
