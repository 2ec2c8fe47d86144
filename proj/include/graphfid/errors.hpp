// Copyright 2026 The graphfid Authors
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

#ifndef GRAPHFID_ERRORS_HPP
#define GRAPHFID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphfid {

/// Error categories, numbered to match the CLI exit codes.
enum class ErrorCategory : int {
    kUsage = 2,
    kCapacity = 3,
    kTheoremDomain = 4,
    kInternal = 5,
};

class Error : public std::runtime_error {
   public:
    Error(ErrorCategory category, const std::string &message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const {
        return category_;
    }

   private:
    ErrorCategory category_;
};

/// Invalid arguments, malformed input files, out-of-domain parameters.
class UsageError : public Error {
   public:
    explicit UsageError(const std::string &message) : Error(ErrorCategory::kUsage, message) {}
};

/// Input parse failure; carries the 1-based line number when known.
class ParseError : public UsageError {
   public:
    ParseError(size_t line, const std::string &message)
        : UsageError("line " + std::to_string(line) + ": " + message), line_(line) {}

    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// Requested computation exceeds an enumeration or oracle size cap.
class CapacityError : public Error {
   public:
    explicit CapacityError(const std::string &message)
        : Error(ErrorCategory::kCapacity, message) {}
};

/// Inputs outside the domain of the single-setting estimation theorem
/// (qubit count not a multiple of 4, error probability above 3/4, ...).
class TheoremDomainError : public Error {
   public:
    explicit TheoremDomainError(const std::string &message)
        : Error(ErrorCategory::kTheoremDomain, message) {}
};

/// Violated internal invariant (e.g. a stabilizer product with an imaginary
/// phase). Reaching this indicates a bug, not bad input.
class InternalError : public Error {
   public:
    explicit InternalError(const std::string &message)
        : Error(ErrorCategory::kInternal, message) {}
};

}  // namespace graphfid

#endif
