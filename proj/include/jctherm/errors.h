// Copyright 2026 The jctherm Authors
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

#ifndef JCTHERM_ERRORS_H
#define JCTHERM_ERRORS_H

#include <stdexcept>

namespace jctherm {

/// Fock truncation dimension of zero (or a non-square matrix).
class InvalidDimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A state whose numbers cannot be a physical density matrix (complex
/// populations, significantly negative probabilities, total above one).
class CorruptedStateError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Too much probability mass has leaked past the Fock cutoff.
class TruncationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A number distribution is too short for the requested criterion order.
class IndexError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

class UndefinedRatioError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class EmptyFilterError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Eigensolver failure.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Criterion order needs a population outside the measured window.
class UnmeasurableOrderError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace jctherm

#endif
