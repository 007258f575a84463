// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace abharm {

enum class ErrorCode {
    NonPositiveOrder,
    SizeCapExceeded,
    ShapeMismatch,
    IndexOutOfRange,
    ExponentCapExceeded,
    OverflowToInfinity,
    DepthTooSmall,
    ZeroBase,
    BaseTooSmall,
    NonFiniteValue,
    InvalidArgument,
    ParseError,
    IoError,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Domain error carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
    throw Error(code, message);
}

} // namespace abharm
