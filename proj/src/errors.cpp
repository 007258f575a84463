// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include "abharm/errors.hpp"

namespace abharm {

const char* error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::NonPositiveOrder: return "NonPositiveOrder";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ExponentCapExceeded: return "ExponentCapExceeded";
    case ErrorCode::OverflowToInfinity: return "OverflowToInfinity";
    case ErrorCode::DepthTooSmall: return "DepthTooSmall";
    case ErrorCode::ZeroBase: return "ZeroBase";
    case ErrorCode::BaseTooSmall: return "BaseTooSmall";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace abharm
