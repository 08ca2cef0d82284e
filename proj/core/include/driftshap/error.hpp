// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace driftshap {

// Base class for all user-correctable failures: bad data, bad config,
// malformed expressions, unreadable files. The CLI maps these to exit code 2;
// anything else (std::logic_error and friends) is an internal failure.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model or expression evaluation failed on concrete data (division by zero,
// overflow to non-finite). Messages carry the offending row index.
class EvalError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace driftshap
