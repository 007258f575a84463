// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "abharm/dual.hpp"
#include "abharm/function.hpp"
#include "abharm/group.hpp"
#include "abharm/haar.hpp"

namespace abharm {

/// Twiddle tables for the fast transform, computed once per spec and
/// immutable afterwards. One table of forward roots exp(-2*pi*i*k/n) per
/// cyclic factor, plus the factor's prime radix decomposition.
///
/// The fast path runs row-column over the cyclic factors; inside a factor a
/// composite order is split recursively by its prime radices and prime
/// orders are evaluated directly. Direct evaluation costs O(p^2) per line,
/// which is the documented price for large prime factors (no convolution
/// reduction is attempted).
struct FourierPlan {
    explicit FourierPlan(const GroupSpec& spec);

    struct Factor {
        std::int64_t n = 1;
        std::vector<std::int64_t> radices; // prime factors, smallest first
        std::vector<Complex> roots;        // exp(-2*pi*i*k/n)
    };

    GroupSpec spec;
    std::vector<Factor> factors;
    std::int64_t max_factor_order = 1;
};

/// Reference transform: f_hat(t) = h * sum_x f(x) * conj(chi_t(x)), one
/// explicit O(N^2) double loop. Bit-deterministic for a fixed input; the
/// correctness oracle for the fast path.
SpectrumFunction fourier_naive(const HaarWeight& w, const GroupFunction& f);

/// Fast transform; same contract as fourier_naive.
SpectrumFunction fourier_fast(const HaarWeight& w, const GroupFunction& f);
SpectrumFunction fourier_fast(const FourierPlan& plan, const HaarWeight& w,
                              const GroupFunction& f);

/// f(x) = (1/(h*N)) * sum_t F(t) * chi_t(x).
GroupFunction inverse_fourier(const HaarWeight& w, const SpectrumFunction& F);
GroupFunction inverse_fourier(const FourierPlan& plan, const HaarWeight& w,
                              const SpectrumFunction& F);
/// O(N^2) reference inverse, mirror of fourier_naive.
GroupFunction inverse_fourier_naive(const HaarWeight& w, const SpectrumFunction& F);

/// Above this order convolve() goes through the spectral path.
inline constexpr std::size_t kSpectralConvolutionThreshold = 256;

/// (f*g)(x) = h * sum_y f(y) g(x - y). Direct O(N^2) up to the threshold,
/// transform-multiply-invert beyond it.
GroupFunction convolve(const HaarWeight& w, const GroupFunction& f, const GroupFunction& g);
GroupFunction convolve_direct(const HaarWeight& w, const GroupFunction& f,
                              const GroupFunction& g);

/// output(x) = f(x - a); a pure re-indexing, no rounding.
GroupFunction translate(const GroupFunction& f, const GroupElement& a);

/// One term of a finitely supported function on the integers.
struct SupportPoint {
    std::int64_t index = 0;
    Complex value;
};

/// sum_k f(k) * conj(z)^k, accumulated Horner-style over the support range
/// [min index, max index]. Duplicate indices add. Indices beyond the
/// exponent cap are rejected; a non-representable magnitude raises
/// OverflowToInfinity.
Complex fourier_laplace_integers(std::span<const SupportPoint> support,
                                 const LaurentCharacter& phi,
                                 std::int64_t exponent_cap = kDefaultExponentCap);

} // namespace abharm
