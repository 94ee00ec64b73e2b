// Copyright 2026 The conformal-ladder Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace conformal_ladder {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (odd Bernoulli index,
/// mismatched truncation orders, singular map input, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A truncated expansion did not reach the requested tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// An operator was applied to a state whose image leaves the truncated
/// Fock space.
class GuardBandViolation : public Error {
public:
    using Error::Error;
};

/// An internal construction failed its own defining identity.
class ConstructionError : public Error {
public:
    using Error::Error;
};

} // namespace conformal_ladder
