/*
   Copyright 2026 The qlucas Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QLUCAS_ERRORS_HPP
#define QLUCAS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlucas {

/// Raised when an operation is called outside its domain (zero inverse,
/// real input to axis(), constant polynomial handed to a root finder, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Iterative solver gave up. `best` carries a human readable dump of the
/// last iterate.
class ConvergenceError : public std::runtime_error {
   public:
    ConvergenceError(const std::string& what, std::string best)
        : std::runtime_error(what), best_(std::move(best)) {}
    const std::string& best_iterate() const noexcept { return best_; }

   private:
    std::string best_;
};

/// An algebraic identity that must hold exactly (up to rounding) did not.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

/// A computed root failed its validation step.
class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A proven inequality or inclusion was observed to fail; always a bug.
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
   public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg),
          pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

   private:
    std::size_t pos_;
};

}  // namespace qlucas

#endif
