// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "abharm/dual.hpp"
#include "abharm/function.hpp"
#include "abharm/group.hpp"

namespace abharm {

/// The compact group of base-n digit sequences, addition per digit mod n.
/// Never materialized; everything happens on finite-depth truncations.
struct SequenceGroupSpec {
    std::int64_t base = 2;

    bool operator==(const SequenceGroupSpec&) const = default;
};

SequenceGroupSpec make_sequence_group(std::int64_t base);

/// The first `depth` digits of a point; a depth-l prefix names the l-th
/// standard neighborhood (all sequences sharing those digits).
struct Prefix {
    std::int64_t base = 2;
    std::vector<std::int64_t> digits;

    std::size_t depth() const { return digits.size(); }
    bool operator==(const Prefix&) const = default;
};

Prefix make_prefix(const SequenceGroupSpec& spec, std::vector<std::int64_t> digits);

/// The depth-l truncation [n]^l as a plain finite group.
GroupSpec truncation_group(const SequenceGroupSpec& spec, std::size_t depth,
                           std::size_t size_cap = kDefaultSizeCap);

/// True iff x and y agree on the first l digits; l = 0 is the whole group.
/// Both prefixes must reach depth l.
bool in_neighborhood(const Prefix& x, const Prefix& y, std::size_t l);

/// A function on the sequence group depending only on the first `depth`
/// digits, stored as its table on the depth-l truncation.
struct CylinderFunction {
    SequenceGroupSpec spec;
    std::size_t depth = 0;
    GroupFunction table;
};

CylinderFunction make_cylinder(const SequenceGroupSpec& spec, std::size_t depth,
                               std::vector<Complex> values,
                               std::size_t size_cap = kDefaultSizeCap);

/// Lift to a deeper truncation: the value at a depth-l2 tuple is the value
/// of cf at its depth-l prefix. Identity when l2 == depth.
CylinderFunction refine(const CylinderFunction& cf, std::size_t l2,
                        std::size_t size_cap = kDefaultSizeCap);

/// Mass-1 integral: n^{-l} times the table sum. Refinement-invariant.
Complex haar_integrate_cylinder(const CylinderFunction& cf);

/// The n^l characters of the depth-l truncation; each lifts to a character
/// of the full sequence group constant on depth-l cylinders.
std::vector<Character> depth_characters(const SequenceGroupSpec& spec, std::size_t depth,
                                        std::size_t size_cap = kDefaultSizeCap);

/// Fourier transform of the table at h = n^{-l}. For n = 2 this is the
/// Walsh-Hadamard transform scaled by 2^{-l}.
SpectrumFunction transform_cylinder(const CylinderFunction& cf);

} // namespace abharm
