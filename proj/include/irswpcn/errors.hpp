// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irswpcn Authors
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

#ifndef IRSWPCN_ERRORS_HPP
#define IRSWPCN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace irswpcn {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. a node
/// behind the surface, W evaluated below -1/e).
class DomainError : public Error {
public:
    using Error::Error;
};

/// The allocation problem has no solution with positive common rate
/// (some user sees a zero end-to-end gain).
class InfeasibleError : public Error {
public:
    using Error::Error;
};

/// A scenario or configuration violates one or more invariants. Every
/// violated invariant is reported, not only the first.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string out = "invalid scenario:";
        for (const auto& item : items) {
            out += "\n  - ";
            out += item;
        }
        return out;
    }

    std::vector<std::string> violations_;
};

/// Malformed input document.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace irswpcn

#endif  // IRSWPCN_ERRORS_HPP
