// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include "abharm/function.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "abharm/errors.hpp"

namespace abharm {

namespace {

void check_values(const GroupSpec& spec, const std::vector<Complex>& values)
{
    if (values.size() != spec.order)
        fail(ErrorCode::ShapeMismatch,
             "value array has " + std::to_string(values.size()) + " entries, group has " +
                 std::to_string(spec.order) + " points");
    for (const Complex& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            fail(ErrorCode::NonFiniteValue, "function values must be finite");
}

} // namespace

GroupFunction make_function(GroupSpec spec, std::vector<Complex> values)
{
    check_values(spec, values);
    return GroupFunction{std::move(spec), std::move(values)};
}

SpectrumFunction make_spectrum(GroupSpec spec, std::vector<Complex> values)
{
    check_values(spec, values);
    return SpectrumFunction{std::move(spec), std::move(values)};
}

} // namespace abharm
