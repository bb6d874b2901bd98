/*
 * Copyright 2026 the picode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PICODE_ERRORS_HPP
#define PICODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace picode {

// Failure conditions surfaced by the library. Grouped by how the CLI maps
// them to exit codes: parse/io -> 1, construction preconditions -> 2,
// resource caps -> 4. Certification failures are reported in certificates,
// never thrown.
enum class ErrorKind {
    NegativeRadicand,
    RadicandTooLarge,
    PartitionMismatch,
    TooFewOrbits,
    NotAnInteger,
    NegativePart,
    SumMismatch,
    DistanceTooSmall,
    DegreeBoundViolated,
    NotDivisible,
    NegativeCoefficient,
    ClassSumMismatch,
    ParameterBoundViolated,
    DimensionMismatch,
    DimensionCap,
    InsufficientPoints,
    ParseError,
    IoError,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NegativeRadicand: return "NegativeRadicand";
        case ErrorKind::RadicandTooLarge: return "RadicandTooLarge";
        case ErrorKind::PartitionMismatch: return "PartitionMismatch";
        case ErrorKind::TooFewOrbits: return "TooFewOrbits";
        case ErrorKind::NotAnInteger: return "NotAnInteger";
        case ErrorKind::NegativePart: return "NegativePart";
        case ErrorKind::SumMismatch: return "SumMismatch";
        case ErrorKind::DistanceTooSmall: return "DistanceTooSmall";
        case ErrorKind::DegreeBoundViolated: return "DegreeBoundViolated";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::NegativeCoefficient: return "NegativeCoefficient";
        case ErrorKind::ClassSumMismatch: return "ClassSumMismatch";
        case ErrorKind::ParameterBoundViolated: return "ParameterBoundViolated";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::DimensionCap: return "DimensionCap";
        case ErrorKind::InsufficientPoints: return "InsufficientPoints";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          kind_(kind),
          message_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& message() const noexcept { return message_; }

   private:
    ErrorKind kind_;
    std::string message_;
};

}  // namespace picode

#endif
