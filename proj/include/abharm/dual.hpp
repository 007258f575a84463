// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "abharm/function.hpp"
#include "abharm/group.hpp"

namespace abharm {

/// exp(2*pi*i*k/n), with the quarter-turn cases (k*4 divisible by n) snapped
/// to the exact axis values 1, i, -1, -i.
Complex unit_root(std::int64_t k, std::int64_t n);

/// Per-cyclic-factor root-of-unity tables: unit[j][k] = exp(2*pi*i*k/n_j).
/// Built once and shared read-only between all characters of a spec.
struct RootTables {
    std::vector<std::vector<Complex>> unit;
};

std::shared_ptr<const RootTables> make_root_tables(const GroupSpec& spec);

/// A character of a finite abelian group, stored as its frequency tuple.
/// Evaluation at a is exp(2*pi*i * sum_j t_j a_j / n_j), a table-lookup
/// product with modulus 1 up to rounding.
struct Character {
    GroupSpec spec;
    std::vector<std::int64_t> frequencies;
    std::shared_ptr<const RootTables> roots;
};

Character make_character(const GroupSpec& spec, std::vector<std::int64_t> frequencies);
Character make_character(const GroupSpec& spec, std::vector<std::int64_t> frequencies,
                         std::shared_ptr<const RootTables> roots);

Complex eval_character(const Character& chi, const GroupElement& a);

/// All `order` characters, in rank order of their frequency tuples.
std::vector<Character> dual_group(const GroupSpec& spec);

/// k -> z^k on the integers; the base may lie off the unit circle, in which
/// case the character is unbounded.
struct LaurentCharacter {
    Complex base;
};

inline constexpr std::int64_t kDefaultExponentCap = 1'000'000;

/// Rejects a zero (or non-finite) base.
LaurentCharacter make_laurent_character(Complex base);

/// z^k computed through |z|^k and k*arg z so that huge exponents stay stable.
Complex eval_unbounded(const LaurentCharacter& phi, std::int64_t k,
                       std::int64_t exponent_cap = kDefaultExponentCap);

enum class Boundedness { Bounded, Unbounded };

/// Bounded iff | |z| - 1 | <= 1e-12; a bounded character maps into the unit
/// circle, an unbounded one has sup_k |z^k| = infinity.
Boundedness classify_character(const LaurentCharacter& phi);

} // namespace abharm
