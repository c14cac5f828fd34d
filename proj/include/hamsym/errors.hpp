/*
 * Copyright 2026 The hamsym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef HAMSYM_ERRORS_HPP
#define HAMSYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hamsym {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
   public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid input: bad parameters, out-of-range arguments, malformed data.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A computation would exceed a configured size or work budget.
class BudgetError : public Error {
   public:
    using Error::Error;
};

/// An internal cross-check that encodes a proven statement failed. This is
/// the "must never fire" sentinel; the CLI maps it to exit code 2 so that
/// CI can tell genuine contradictions apart from usage errors.
class ContradictionError : public Error {
   public:
    using Error::Error;
};

class NotPrimeError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class ReduciblePolynomialError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class UnsupportedSizeError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class OutOfRangeError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class LengthMismatchError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class TooLargeError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class SpecInvalidError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class DegenerateGraphError : public ValidationError {
   public:
    using ValidationError::ValidationError;
};

class BudgetExceededError : public BudgetError {
   public:
    using BudgetError::BudgetError;
};

class NoConvergenceError : public BudgetError {
   public:
    using BudgetError::BudgetError;
};

class NotConstantError : public ContradictionError {
   public:
    using ContradictionError::ContradictionError;
};

class AssertionFailureError : public ContradictionError {
   public:
    using ContradictionError::ContradictionError;
};

class NotAnAutomorphismError : public ContradictionError {
   public:
    using ContradictionError::ContradictionError;
};

}  // namespace hamsym

#endif  // HAMSYM_ERRORS_HPP
