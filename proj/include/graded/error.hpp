// Copyright graded-descent contributors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GRADED_ERROR_HPP
#define GRADED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graded {

/// Domain error codes. Parse failures use ParseError; everything else is a
/// well-defined mathematical failure mode of some operation.
enum class Errc {
    DivisionByZero,
    OwnerMismatch,
    NotSeparable,
    FiniteOrderRadius,
    NotHomogeneous,
    ZeroLinearCoefficient,
    RadiusNotInOrbit,
    RootUnavailable,
    TrivialOnProbes,
    HeartFails,
    WrongFamily,
    ActionOrderMismatch,
    SetupMismatch,
    NotScalarCocycle,
    ZeroArgument,
    ParseError,
    Internal,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace graded

#endif
