// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace abharm {

/// Hard ceiling on the number of points a group may carry (dense storage).
inline constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 24;

/// A finite abelian group presented as a product of cyclic groups.
///
/// Elements are tuples of residues, one per cyclic factor, and are stored
/// densely under a little-endian mixed-radix rank: the first listed factor
/// varies fastest, rank(a) = sum_j a_j * prod_{i<j} n_i.
struct GroupSpec {
    std::vector<std::int64_t> cyclic_orders;
    std::vector<std::size_t> strides; // strides[j] = prod of orders before j
    std::size_t order = 1;

    bool operator==(const GroupSpec&) const = default;
};

struct GroupElement {
    std::vector<std::int64_t> residues;

    bool operator==(const GroupElement&) const = default;
};

/// Validates the factorization and precomputes strides and the total order.
/// Throws NonPositiveOrder for entries < 1 and SizeCapExceeded when the
/// product of orders exceeds `size_cap`.
GroupSpec make_group(std::vector<std::int64_t> cyclic_orders,
                     std::size_t size_cap = kDefaultSizeCap);

/// Validated element constructor; residues must be reduced already.
GroupElement element(const GroupSpec& spec, std::vector<std::int64_t> residues);

GroupElement zero(const GroupSpec& spec);
GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupSpec& spec, const GroupElement& a);

/// Little-endian mixed-radix rank; bijective onto [0, order).
std::size_t rank(const GroupSpec& spec, const GroupElement& a);
GroupElement unrank(const GroupSpec& spec, std::size_t k);

} // namespace abharm
