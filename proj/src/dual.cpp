// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include "abharm/dual.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "abharm/errors.hpp"

namespace abharm {

Complex unit_root(std::int64_t k, std::int64_t n)
{
    k %= n;
    if (k < 0)
        k += n;
    if ((4 * k) % n == 0) {
        switch ((4 * k) / n) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
        }
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

std::shared_ptr<const RootTables> make_root_tables(const GroupSpec& spec)
{
    auto tables = std::make_shared<RootTables>();
    tables->unit.reserve(spec.cyclic_orders.size());
    for (const std::int64_t n : spec.cyclic_orders) {
        std::vector<Complex> row(static_cast<std::size_t>(n));
        for (std::int64_t k = 0; k < n; ++k)
            row[static_cast<std::size_t>(k)] = unit_root(k, n);
        tables->unit.push_back(std::move(row));
    }
    return tables;
}

namespace {

void check_frequencies(const GroupSpec& spec, const std::vector<std::int64_t>& freqs)
{
    if (freqs.size() != spec.cyclic_orders.size())
        fail(ErrorCode::ShapeMismatch,
             "frequency tuple has " + std::to_string(freqs.size()) + " entries, spec has " +
                 std::to_string(spec.cyclic_orders.size()) + " factors");
    for (std::size_t j = 0; j < freqs.size(); ++j)
        if (freqs[j] < 0 || freqs[j] >= spec.cyclic_orders[j])
            fail(ErrorCode::IndexOutOfRange,
                 "frequency " + std::to_string(freqs[j]) + " not reduced modulo " +
                     std::to_string(spec.cyclic_orders[j]));
}

} // namespace

Character make_character(const GroupSpec& spec, std::vector<std::int64_t> frequencies)
{
    return make_character(spec, std::move(frequencies), make_root_tables(spec));
}

Character make_character(const GroupSpec& spec, std::vector<std::int64_t> frequencies,
                         std::shared_ptr<const RootTables> roots)
{
    check_frequencies(spec, frequencies);
    return Character{spec, std::move(frequencies), std::move(roots)};
}

Complex eval_character(const Character& chi, const GroupElement& a)
{
    if (a.residues.size() != chi.spec.cyclic_orders.size())
        fail(ErrorCode::ShapeMismatch, "element shape does not match the character's spec");
    Complex acc{1.0, 0.0};
    for (std::size_t j = 0; j < a.residues.size(); ++j) {
        const std::int64_t n = chi.spec.cyclic_orders[j];
        const std::int64_t r = a.residues[j];
        if (r < 0 || r >= n)
            fail(ErrorCode::IndexOutOfRange, "element residue not reduced");
        acc *= chi.roots->unit[j][static_cast<std::size_t>((chi.frequencies[j] * r) % n)];
    }
    return acc;
}

std::vector<Character> dual_group(const GroupSpec& spec)
{
    const auto roots = make_root_tables(spec);
    std::vector<Character> characters;
    characters.reserve(spec.order);
    for (std::size_t k = 0; k < spec.order; ++k)
        characters.push_back(Character{spec, unrank(spec, k).residues, roots});
    return characters;
}

LaurentCharacter make_laurent_character(Complex base)
{
    if (!std::isfinite(base.real()) || !std::isfinite(base.imag()))
        fail(ErrorCode::NonFiniteValue, "character base must be finite");
    if (base == Complex{0.0, 0.0})
        fail(ErrorCode::ZeroBase, "character base must be a nonzero complex number");
    return LaurentCharacter{base};
}

Complex eval_unbounded(const LaurentCharacter& phi, std::int64_t k, std::int64_t exponent_cap)
{
    if (k > exponent_cap || k < -exponent_cap)
        fail(ErrorCode::ExponentCapExceeded,
             "exponent " + std::to_string(k) + " beyond the cap " + std::to_string(exponent_cap));
    if (k == 0)
        return {1.0, 0.0};
    const double mag = std::exp(static_cast<double>(k) * std::log(std::abs(phi.base)));
    if (!std::isfinite(mag))
        fail(ErrorCode::OverflowToInfinity,
             "|z|^" + std::to_string(k) + " is not representable");
    const double angle = static_cast<double>(k) * std::arg(phi.base);
    return {mag * std::cos(angle), mag * std::sin(angle)};
}

Boundedness classify_character(const LaurentCharacter& phi)
{
    return std::abs(std::abs(phi.base) - 1.0) <= 1e-12 ? Boundedness::Bounded
                                                       : Boundedness::Unbounded;
}

} // namespace abharm
