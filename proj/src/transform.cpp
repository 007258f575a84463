// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include "abharm/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>
#include <utility>

#include "abharm/errors.hpp"

namespace abharm {

namespace {

std::vector<std::int64_t> prime_radices(std::int64_t n)
{
    std::vector<std::int64_t> radices;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            radices.push_back(p);
            n /= p;
        }
    }
    if (n > 1)
        radices.push_back(n);
    return radices;
}

inline Complex root_at(const std::vector<Complex>& roots, std::size_t idx, bool conj_roots)
{
    const Complex w = roots[idx];
    return conj_roots ? std::conj(w) : w;
}

// Out-of-place DFT of length n over a strided input line. `roots` is the
// table for the full factor order n0 = n * root_stride; level s of the
// recursion reads it with stride root_stride * s, so one table serves every
// radix split. `scratch` must hold n values; it is free for reuse by the
// time a recursive call returns.
void dft_recurse(const Complex* in, std::size_t in_stride, Complex* out, Complex* scratch,
                 std::int64_t n, std::size_t root_stride, const std::vector<Complex>& roots,
                 bool conj_roots, const std::int64_t* radices, std::size_t n_radices)
{
    if (n == 1) {
        out[0] = in[0];
        return;
    }
    const std::size_t n0 = roots.size();
    if (n_radices == 1) {
        // Prime length: direct evaluation, O(p^2).
        for (std::int64_t t = 0; t < n; ++t) {
            Complex acc{0.0, 0.0};
            for (std::int64_t x = 0; x < n; ++x) {
                const std::size_t idx =
                    static_cast<std::size_t>((t * x) % n) * root_stride % n0;
                acc += in[static_cast<std::size_t>(x) * in_stride] *
                       root_at(roots, idx, conj_roots);
            }
            out[static_cast<std::size_t>(t)] = acc;
        }
        return;
    }

    const std::int64_t r = radices[0];
    const std::int64_t m = n / r;

    // Decimation in time: r interleaved sub-transforms of length m.
    for (std::int64_t q = 0; q < r; ++q)
        dft_recurse(in + static_cast<std::size_t>(q) * in_stride, in_stride * static_cast<std::size_t>(r),
                    out + static_cast<std::size_t>(q * m), scratch, m,
                    root_stride * static_cast<std::size_t>(r), roots, conj_roots, radices + 1,
                    n_radices - 1);

    // Combine: X[k1 + m*k2] = sum_q w_n^{q*(k1 + m*k2)} * Y_q[k1].
    for (std::int64_t k1 = 0; k1 < m; ++k1) {
        for (std::int64_t k2 = 0; k2 < r; ++k2) {
            const std::int64_t k = k1 + m * k2;
            Complex acc{0.0, 0.0};
            for (std::int64_t q = 0; q < r; ++q) {
                const std::size_t idx =
                    static_cast<std::size_t>((q * k) % n) * root_stride % n0;
                acc += out[static_cast<std::size_t>(q * m + k1)] *
                       root_at(roots, idx, conj_roots);
            }
            scratch[static_cast<std::size_t>(k)] = acc;
        }
    }
    std::memcpy(out, scratch, static_cast<std::size_t>(n) * sizeof(Complex));
}

// In-place 1-D pass along one cyclic factor, over every line of the array.
void apply_axis(std::vector<Complex>& data, const GroupSpec& spec, std::size_t axis,
                const FourierPlan::Factor& factor, bool conj_roots,
                std::vector<Complex>& line, std::vector<Complex>& scratch)
{
    const auto n = static_cast<std::size_t>(factor.n);
    if (n == 1)
        return;
    const std::size_t stride = spec.strides[axis];
    const std::size_t block = stride * n;
    for (std::size_t base = 0; base < data.size(); base += block) {
        for (std::size_t offset = 0; offset < stride; ++offset) {
            const Complex* in = data.data() + base + offset;
            dft_recurse(in, stride, line.data(), scratch.data(), factor.n, 1, factor.roots,
                        conj_roots, factor.radices.data(), factor.radices.size());
            for (std::size_t i = 0; i < n; ++i)
                data[base + offset + i * stride] = line[i];
        }
    }
}

std::vector<Complex> run_plan(const FourierPlan& plan, std::vector<Complex> data,
                              bool conj_roots, double scale)
{
    const auto max_n = static_cast<std::size_t>(plan.max_factor_order);
    std::vector<Complex> line(max_n);
    std::vector<Complex> scratch(max_n);
    for (std::size_t axis = 0; axis < plan.factors.size(); ++axis)
        apply_axis(data, plan.spec, axis, plan.factors[axis], conj_roots, line, scratch);
    for (Complex& v : data)
        v *= scale;
    return data;
}

void check_weight(const HaarWeight& w, const GroupSpec& spec)
{
    if (!(w.spec == spec))
        fail(ErrorCode::ShapeMismatch, "Haar weight lives on a different group");
}

} // namespace

FourierPlan::FourierPlan(const GroupSpec& group) : spec(group)
{
    factors.reserve(spec.cyclic_orders.size());
    for (const std::int64_t n : spec.cyclic_orders) {
        Factor f;
        f.n = n;
        f.radices = prime_radices(n);
        f.roots.resize(static_cast<std::size_t>(n));
        for (std::int64_t k = 0; k < n; ++k)
            f.roots[static_cast<std::size_t>(k)] = unit_root(-k, n);
        factors.push_back(std::move(f));
        max_factor_order = std::max(max_factor_order, n);
    }
}

SpectrumFunction fourier_naive(const HaarWeight& w, const GroupFunction& f)
{
    const GroupSpec& spec = f.spec;
    check_weight(w, spec);
    const auto roots = make_root_tables(spec);
    const std::size_t n_factors = spec.cyclic_orders.size();
    const std::size_t n = spec.order;

    std::vector<Complex> out(n);
    std::vector<std::int64_t> t_digits(n_factors, 0);
    std::vector<std::int64_t> x_digits(n_factors, 0);
    for (std::size_t tr = 0; tr < n; ++tr) {
        std::fill(x_digits.begin(), x_digits.end(), 0);
        Complex acc{0.0, 0.0};
        for (std::size_t xr = 0; xr < n; ++xr) {
            Complex chi{1.0, 0.0};
            for (std::size_t j = 0; j < n_factors; ++j)
                chi *= roots->unit[j][static_cast<std::size_t>(
                    (t_digits[j] * x_digits[j]) % spec.cyclic_orders[j])];
            acc += f.values[xr] * std::conj(chi);
            for (std::size_t j = 0; j < n_factors; ++j) {
                if (++x_digits[j] < spec.cyclic_orders[j])
                    break;
                x_digits[j] = 0;
            }
        }
        out[tr] = w.point_mass * acc;
        for (std::size_t j = 0; j < n_factors; ++j) {
            if (++t_digits[j] < spec.cyclic_orders[j])
                break;
            t_digits[j] = 0;
        }
    }
    return make_spectrum(spec, std::move(out));
}

SpectrumFunction fourier_fast(const HaarWeight& w, const GroupFunction& f)
{
    return fourier_fast(FourierPlan(f.spec), w, f);
}

SpectrumFunction fourier_fast(const FourierPlan& plan, const HaarWeight& w,
                              const GroupFunction& f)
{
    if (!(plan.spec == f.spec))
        fail(ErrorCode::ShapeMismatch, "plan and function live on different groups");
    check_weight(w, f.spec);
    return make_spectrum(f.spec,
                         run_plan(plan, f.values, /*conj_roots=*/false, w.point_mass));
}

GroupFunction inverse_fourier(const HaarWeight& w, const SpectrumFunction& F)
{
    return inverse_fourier(FourierPlan(F.spec), w, F);
}

GroupFunction inverse_fourier(const FourierPlan& plan, const HaarWeight& w,
                              const SpectrumFunction& F)
{
    if (!(plan.spec == F.spec))
        fail(ErrorCode::ShapeMismatch, "plan and spectrum live on different groups");
    check_weight(w, F.spec);
    const double scale = 1.0 / (w.point_mass * static_cast<double>(F.spec.order));
    return make_function(F.spec, run_plan(plan, F.values, /*conj_roots=*/true, scale));
}

GroupFunction inverse_fourier_naive(const HaarWeight& w, const SpectrumFunction& F)
{
    const GroupSpec& spec = F.spec;
    check_weight(w, spec);
    const auto roots = make_root_tables(spec);
    const std::size_t n_factors = spec.cyclic_orders.size();
    const std::size_t n = spec.order;
    const double scale = 1.0 / (w.point_mass * static_cast<double>(n));

    std::vector<Complex> out(n);
    std::vector<std::int64_t> x_digits(n_factors, 0);
    std::vector<std::int64_t> t_digits(n_factors, 0);
    for (std::size_t xr = 0; xr < n; ++xr) {
        std::fill(t_digits.begin(), t_digits.end(), 0);
        Complex acc{0.0, 0.0};
        for (std::size_t tr = 0; tr < n; ++tr) {
            Complex chi{1.0, 0.0};
            for (std::size_t j = 0; j < n_factors; ++j)
                chi *= roots->unit[j][static_cast<std::size_t>(
                    (t_digits[j] * x_digits[j]) % spec.cyclic_orders[j])];
            acc += F.values[tr] * chi;
            for (std::size_t j = 0; j < n_factors; ++j) {
                if (++t_digits[j] < spec.cyclic_orders[j])
                    break;
                t_digits[j] = 0;
            }
        }
        out[xr] = scale * acc;
        for (std::size_t j = 0; j < n_factors; ++j) {
            if (++x_digits[j] < spec.cyclic_orders[j])
                break;
            x_digits[j] = 0;
        }
    }
    return make_function(spec, std::move(out));
}

GroupFunction convolve_direct(const HaarWeight& w, const GroupFunction& f,
                              const GroupFunction& g)
{
    const GroupSpec& spec = f.spec;
    check_weight(w, spec);
    if (!(g.spec == spec))
        fail(ErrorCode::ShapeMismatch, "convolution operands live on different groups");
    const std::size_t n = spec.order;
    const std::size_t n_factors = spec.cyclic_orders.size();

    std::vector<Complex> out(n);
    std::vector<std::int64_t> x_digits(n_factors, 0);
    std::vector<std::int64_t> y_digits(n_factors, 0);
    for (std::size_t xr = 0; xr < n; ++xr) {
        std::fill(y_digits.begin(), y_digits.end(), 0);
        Complex acc{0.0, 0.0};
        for (std::size_t yr = 0; yr < n; ++yr) {
            std::size_t diff = 0;
            for (std::size_t j = 0; j < n_factors; ++j) {
                const std::int64_t nj = spec.cyclic_orders[j];
                const std::int64_t d = (x_digits[j] - y_digits[j] + nj) % nj;
                diff += static_cast<std::size_t>(d) * spec.strides[j];
            }
            acc += f.values[yr] * g.values[diff];
            for (std::size_t j = 0; j < n_factors; ++j) {
                if (++y_digits[j] < spec.cyclic_orders[j])
                    break;
                y_digits[j] = 0;
            }
        }
        out[xr] = w.point_mass * acc;
        for (std::size_t j = 0; j < n_factors; ++j) {
            if (++x_digits[j] < spec.cyclic_orders[j])
                break;
            x_digits[j] = 0;
        }
    }
    return make_function(spec, std::move(out));
}

GroupFunction convolve(const HaarWeight& w, const GroupFunction& f, const GroupFunction& g)
{
    if (f.spec.order <= kSpectralConvolutionThreshold)
        return convolve_direct(w, f, g);
    const FourierPlan plan(f.spec);
    const SpectrumFunction F = fourier_fast(plan, w, f);
    const SpectrumFunction G = fourier_fast(plan, w, g);
    std::vector<Complex> product(F.values.size());
    for (std::size_t t = 0; t < product.size(); ++t)
        product[t] = F.values[t] * G.values[t];
    return inverse_fourier(plan, w, make_spectrum(f.spec, std::move(product)));
}

GroupFunction translate(const GroupFunction& f, const GroupElement& a)
{
    const GroupSpec& spec = f.spec;
    if (a.residues.size() != spec.cyclic_orders.size())
        fail(ErrorCode::ShapeMismatch, "shift does not match the function's group");
    for (std::size_t j = 0; j < a.residues.size(); ++j)
        if (a.residues[j] < 0 || a.residues[j] >= spec.cyclic_orders[j])
            fail(ErrorCode::IndexOutOfRange, "shift residue not reduced");

    const std::size_t n = spec.order;
    const std::size_t n_factors = spec.cyclic_orders.size();
    std::vector<Complex> out(n);
    std::vector<std::int64_t> x_digits(n_factors, 0);
    for (std::size_t xr = 0; xr < n; ++xr) {
        std::size_t src = 0;
        for (std::size_t j = 0; j < n_factors; ++j) {
            const std::int64_t nj = spec.cyclic_orders[j];
            const std::int64_t d = (x_digits[j] - a.residues[j] + nj) % nj;
            src += static_cast<std::size_t>(d) * spec.strides[j];
        }
        out[xr] = f.values[src];
        for (std::size_t j = 0; j < n_factors; ++j) {
            if (++x_digits[j] < spec.cyclic_orders[j])
                break;
            x_digits[j] = 0;
        }
    }
    return GroupFunction{spec, std::move(out)};
}

Complex fourier_laplace_integers(std::span<const SupportPoint> support,
                                 const LaurentCharacter& phi, std::int64_t exponent_cap)
{
    if (support.empty())
        return {0.0, 0.0};

    std::int64_t k_min = support.front().index;
    std::int64_t k_max = support.front().index;
    for (const SupportPoint& p : support) {
        if (p.index > exponent_cap || p.index < -exponent_cap)
            fail(ErrorCode::ExponentCapExceeded,
                 "support index " + std::to_string(p.index) + " beyond the cap " +
                     std::to_string(exponent_cap));
        if (!std::isfinite(p.value.real()) || !std::isfinite(p.value.imag()))
            fail(ErrorCode::NonFiniteValue, "support values must be finite");
        k_min = std::min(k_min, p.index);
        k_max = std::max(k_max, p.index);
    }

    std::vector<Complex> coeff(static_cast<std::size_t>(k_max - k_min) + 1, Complex{0.0, 0.0});
    for (const SupportPoint& p : support)
        coeff[static_cast<std::size_t>(p.index - k_min)] += p.value;

    // Horner over the support range in powers of w = conj(z), then one
    // stable w^{k_min} to place the lowest exponent.
    const Complex w = std::conj(phi.base);
    Complex acc{0.0, 0.0};
    for (std::size_t i = coeff.size(); i-- > 0;)
        acc = acc * w + coeff[i];
    const Complex result = acc * eval_unbounded(LaurentCharacter{w}, k_min, exponent_cap);
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        fail(ErrorCode::OverflowToInfinity, "Fourier-Laplace value is not representable");
    return result;
}

} // namespace abharm
