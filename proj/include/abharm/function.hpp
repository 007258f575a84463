// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include "abharm/group.hpp"

namespace abharm {

using Complex = std::complex<double>;

/// Dense complex-valued function on a finite group, indexed by element rank.
/// All entries are finite; NaN/Inf are rejected at construction.
struct GroupFunction {
    GroupSpec spec;
    std::vector<Complex> values;
};

/// Dense values over the dual group, indexed by the rank of the character's
/// frequency tuple (same mixed-radix convention as elements).
struct SpectrumFunction {
    GroupSpec spec;
    std::vector<Complex> values;
};

GroupFunction make_function(GroupSpec spec, std::vector<Complex> values);
SpectrumFunction make_spectrum(GroupSpec spec, std::vector<Complex> values);

} // namespace abharm
