// Copyright 2026 The rankgauge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace rankgauge {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A caller violated a precondition (mismatched dims, invalid cut, bad rank...).
class UsageError : public Error {
  public:
    using Error::Error;
};

/// Malformed external input (JSON files, example specs).
class InputError : public Error {
  public:
    using Error::Error;
};

/// The parameter vector maps to no state (zero factor block or vanishing sum).
/// Optimizer trials recover from this by reinitializing.
class SingularParameterError : public Error {
  public:
    using Error::Error;
};

/// Every optimization trial failed.
class OptimizationFailure : public Error {
  public:
    using Error::Error;
};

} // namespace rankgauge
