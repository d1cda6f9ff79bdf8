// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace nwidth {

/// Invalid input that a caller could have checked up front (bad spec string,
/// parameter out of range). The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that cannot be carried out numerically or
/// mathematically (non-HWS input to an exact formula, quadrature or SVD
/// failure). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SvdError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace nwidth
