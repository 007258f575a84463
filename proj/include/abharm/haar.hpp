// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "abharm/function.hpp"
#include "abharm/group.hpp"

namespace abharm {

/// The translation-invariant integral on a finite group: every singleton
/// carries the same positive mass h, and integrate(f) = h * sum_x f(x).
/// The normalization is the one degree of freedom the invariance axioms
/// leave open.
struct HaarWeight {
    GroupSpec spec;
    double point_mass = 1.0;
};

HaarWeight make_haar(const GroupSpec& spec, double point_mass);
/// h = 1/order: total mass 1, the compact-group convention.
HaarWeight normalized_haar(const GroupSpec& spec);
/// h = 1: plain summation, makes the delta at zero the convolution unit.
HaarWeight counting_haar(const GroupSpec& spec);

/// h * sum of f in rank order, with pairwise (tree) summation above 2^12
/// points. Linear, real for real f, nonnegative for nonnegative f, and
/// strictly positive when f >= 0 with f(x) > 0 somewhere.
Complex integrate(const HaarWeight& w, const GroupFunction& f);

/// |integrate(x -> f(x + a)) - integrate(f)|.
double check_invariance(const HaarWeight& w, const GroupFunction& f, const GroupElement& a);

/// Largest order accepted by the uniqueness oracle (dense linear algebra).
inline constexpr std::size_t kUniquenessOrderCap = 512;

struct UniquenessReport {
    std::size_t dimension = 0;
    /// A unit vector spanning the invariant ray when dimension == 1;
    /// constant coefficients are the expected shape.
    std::vector<double> null_ray;
};

/// Brute-force uniqueness check: assembles the linear system stating that a
/// functional L(f) = sum_x c_x f(x) is invariant under translation by each
/// generator (one per cyclic factor; every translation when
/// `all_translations`), and measures the dimension of its solution space.
/// Rank decisions use a singular-value cutoff of 1e-10 times the largest
/// singular value. Orders above kUniquenessOrderCap are rejected.
UniquenessReport uniqueness_report(const GroupSpec& spec, bool all_translations = false);

/// Dimension of the invariant-functional space; 1 for every valid spec.
std::size_t uniqueness_oracle(const GroupSpec& spec);

} // namespace abharm
