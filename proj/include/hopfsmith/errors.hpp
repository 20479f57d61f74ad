/* Copyright (C) 2026 hopfsmith contributors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#ifndef HOPFSMITH_ERRORS_HPP
#define HOPFSMITH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopfsmith {

struct DivisionByNonUnit : std::runtime_error {
    explicit DivisionByNonUnit(const std::string& what) : std::runtime_error(what) {}
};

struct NotARoot : std::runtime_error {
    explicit NotARoot(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an element that should lie in a registered algebra (a span with
// a fixed basis) fails to decompose over it.
struct NotInAlgebra : std::runtime_error {
    explicit NotInAlgebra(const std::string& what) : std::runtime_error(what) {}
};

struct NotHomogeneous : std::runtime_error {
    explicit NotHomogeneous(const std::string& what) : std::runtime_error(what) {}
};

// p = 2 (and non-prime p) are rejected everywhere: the modular theory here
// needs 2 invertible and odd-prime divided power structure.
struct UnsupportedPrime : std::runtime_error {
    explicit UnsupportedPrime(const std::string& what) : std::runtime_error(what) {}
};

struct TruncationExceeded : std::runtime_error {
    explicit TruncationExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTwist : std::runtime_error {
    explicit InvalidTwist(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hopfsmith

#endif
