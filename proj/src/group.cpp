// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include "abharm/group.hpp"

#include <string>

#include "abharm/errors.hpp"

namespace abharm {

namespace {

void check_element(const GroupSpec& spec, const GroupElement& a)
{
    if (a.residues.size() != spec.cyclic_orders.size())
        fail(ErrorCode::ShapeMismatch,
             "element has " + std::to_string(a.residues.size()) + " residues, spec has " +
                 std::to_string(spec.cyclic_orders.size()) + " factors");
    for (std::size_t j = 0; j < a.residues.size(); ++j) {
        const std::int64_t r = a.residues[j];
        if (r < 0 || r >= spec.cyclic_orders[j])
            fail(ErrorCode::IndexOutOfRange,
                 "residue " + std::to_string(r) + " not reduced modulo " +
                     std::to_string(spec.cyclic_orders[j]));
    }
}

} // namespace

GroupSpec make_group(std::vector<std::int64_t> cyclic_orders, std::size_t size_cap)
{
    GroupSpec spec;
    spec.strides.reserve(cyclic_orders.size());
    spec.order = 1;
    for (const std::int64_t n : cyclic_orders) {
        if (n < 1)
            fail(ErrorCode::NonPositiveOrder,
                 "cyclic order " + std::to_string(n) + " is not positive");
        spec.strides.push_back(spec.order);
        if (spec.order > size_cap / static_cast<std::size_t>(n))
            fail(ErrorCode::SizeCapExceeded,
                 "group order exceeds the size cap of " + std::to_string(size_cap) + " points");
        spec.order *= static_cast<std::size_t>(n);
    }
    spec.cyclic_orders = std::move(cyclic_orders);
    return spec;
}

GroupElement element(const GroupSpec& spec, std::vector<std::int64_t> residues)
{
    GroupElement a{std::move(residues)};
    check_element(spec, a);
    return a;
}

GroupElement zero(const GroupSpec& spec)
{
    return GroupElement{std::vector<std::int64_t>(spec.cyclic_orders.size(), 0)};
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b)
{
    check_element(spec, a);
    check_element(spec, b);
    GroupElement out;
    out.residues.resize(a.residues.size());
    for (std::size_t j = 0; j < a.residues.size(); ++j)
        out.residues[j] = (a.residues[j] + b.residues[j]) % spec.cyclic_orders[j];
    return out;
}

GroupElement negate(const GroupSpec& spec, const GroupElement& a)
{
    check_element(spec, a);
    GroupElement out;
    out.residues.resize(a.residues.size());
    for (std::size_t j = 0; j < a.residues.size(); ++j)
        out.residues[j] = (spec.cyclic_orders[j] - a.residues[j]) % spec.cyclic_orders[j];
    return out;
}

std::size_t rank(const GroupSpec& spec, const GroupElement& a)
{
    check_element(spec, a);
    std::size_t k = 0;
    for (std::size_t j = 0; j < a.residues.size(); ++j)
        k += static_cast<std::size_t>(a.residues[j]) * spec.strides[j];
    return k;
}

GroupElement unrank(const GroupSpec& spec, std::size_t k)
{
    if (k >= spec.order)
        fail(ErrorCode::IndexOutOfRange,
             "rank " + std::to_string(k) + " not below the group order " +
                 std::to_string(spec.order));
    GroupElement out;
    out.residues.resize(spec.cyclic_orders.size());
    for (std::size_t j = 0; j < spec.cyclic_orders.size(); ++j) {
        const auto n = static_cast<std::size_t>(spec.cyclic_orders[j]);
        out.residues[j] = static_cast<std::int64_t>(k % n);
        k /= n;
    }
    return out;
}

} // namespace abharm
