// SPDX-License-Identifier: Apache-2.0
//
// Error types shared across the library.  Every failure mode that a caller
// may want to distinguish gets its own exception class so that tests and the
// CLI can react precisely (e.g. an overflow is not an invalid input, and a
// window that is too small is not a wrong answer).

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

/// Base class of all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic left the 64-bit range; results are never silently wrapped.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

/// A stream was asked for an entry beyond its prefix (and its annotation,
/// if any, cannot supply the value).  Carries the index that was needed.
class InsufficientPrefixError : public Error {
 public:
  InsufficientPrefixError(std::uint64_t needed_index, const std::string& what)
      : Error(what), needed_index(needed_index) {}
  std::uint64_t needed_index;
};

/// Malformed input: unsorted sets, mismatched windows, bad JSON, ...
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

/// An element or subset fell outside the finite window of an instance.
class WindowError : public Error {
 public:
  explicit WindowError(const std::string& what) : Error(what) {}
};

/// A search completed without finding the requested object
/// (distinct from invalid input).
class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& what) : Error(what) {}
};

/// An enumeration would exceed its configured budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/// The window is too small for the construction to finish
/// (e.g. homogeneous-set growth ran out of candidates).
class WindowExhaustedError : public Error {
 public:
  explicit WindowExhaustedError(const std::string& what) : Error(what) {}
};

}  // namespace ramsey
