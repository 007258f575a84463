// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include "abharm/profinite.hpp"

#include <string>
#include <utility>

#include "abharm/errors.hpp"
#include "abharm/haar.hpp"
#include "abharm/transform.hpp"

namespace abharm {

SequenceGroupSpec make_sequence_group(std::int64_t base)
{
    if (base < 2)
        fail(ErrorCode::BaseTooSmall,
             "sequence group base must be at least 2, got " + std::to_string(base));
    return SequenceGroupSpec{base};
}

Prefix make_prefix(const SequenceGroupSpec& spec, std::vector<std::int64_t> digits)
{
    for (const std::int64_t d : digits)
        if (d < 0 || d >= spec.base)
            fail(ErrorCode::IndexOutOfRange,
                 "digit " + std::to_string(d) + " not reduced modulo " +
                     std::to_string(spec.base));
    return Prefix{spec.base, std::move(digits)};
}

GroupSpec truncation_group(const SequenceGroupSpec& spec, std::size_t depth,
                           std::size_t size_cap)
{
    return make_group(std::vector<std::int64_t>(depth, spec.base), size_cap);
}

bool in_neighborhood(const Prefix& x, const Prefix& y, std::size_t l)
{
    if (x.base != y.base)
        fail(ErrorCode::ShapeMismatch, "prefixes from sequence groups with different bases");
    if (x.depth() < l || y.depth() < l)
        fail(ErrorCode::DepthTooSmall,
             "both prefixes must reach depth " + std::to_string(l));
    for (std::size_t j = 0; j < l; ++j)
        if (x.digits[j] != y.digits[j])
            return false;
    return true;
}

CylinderFunction make_cylinder(const SequenceGroupSpec& spec, std::size_t depth,
                               std::vector<Complex> values, std::size_t size_cap)
{
    GroupSpec truncation = truncation_group(spec, depth, size_cap);
    return CylinderFunction{spec, depth,
                            make_function(std::move(truncation), std::move(values))};
}

CylinderFunction refine(const CylinderFunction& cf, std::size_t l2, std::size_t size_cap)
{
    if (l2 < cf.depth)
        fail(ErrorCode::DepthTooSmall,
             "cannot refine a depth-" + std::to_string(cf.depth) + " cylinder to depth " +
                 std::to_string(l2));
    if (l2 == cf.depth)
        return cf;

    GroupSpec target = truncation_group(cf.spec, l2, size_cap);
    const std::size_t block = cf.table.spec.order;
    std::vector<Complex> values(target.order);
    // New digits index the slow coordinates: the depth-l prefix of a rank-r
    // tuple has rank r mod n^l, so the lift tiles the table.
    for (std::size_t r = 0; r < values.size(); ++r)
        values[r] = cf.table.values[r % block];
    return CylinderFunction{cf.spec, l2, GroupFunction{std::move(target), std::move(values)}};
}

Complex haar_integrate_cylinder(const CylinderFunction& cf)
{
    return integrate(normalized_haar(cf.table.spec), cf.table);
}

std::vector<Character> depth_characters(const SequenceGroupSpec& spec, std::size_t depth,
                                        std::size_t size_cap)
{
    return dual_group(truncation_group(spec, depth, size_cap));
}

SpectrumFunction transform_cylinder(const CylinderFunction& cf)
{
    return fourier_fast(normalized_haar(cf.table.spec), cf.table);
}

} // namespace abharm
