// Copyright (C) 2026 the abharm authors
// SPDX-License-Identifier: Apache-2.0

#include "abharm/haar.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "abharm/errors.hpp"
#include "abharm/function.hpp"

namespace abharm {

namespace {

constexpr std::size_t kPairwiseBlock = std::size_t{1} << 12;

// Rank-order summation, switching to a halving tree above 2^12 points so the
// rounding error grows like O(log N) ulps. Deterministic for a fixed input.
Complex pairwise_sum(const Complex* v, std::size_t n)
{
    if (n <= kPairwiseBlock) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i)
            acc += v[i];
        return acc;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

void check_same_spec(const HaarWeight& w, const GroupFunction& f)
{
    if (!(w.spec == f.spec))
        fail(ErrorCode::ShapeMismatch, "function and weight live on different groups");
}

// One-sided Jacobi (Hestenes) SVD. `m` is rows x cols, column-major; on
// return its columns are mutually orthogonal with norms equal to the
// singular values, and `v` (cols x cols, column-major) accumulates the right
// singular vectors. Working on M directly, rather than on the Gram matrix,
// keeps zero singular values at the eps level instead of sqrt(eps).
void hestenes_svd(std::vector<double>& m, std::size_t rows, std::size_t cols,
                  std::vector<double>& v)
{
    v.assign(cols * cols, 0.0);
    for (std::size_t i = 0; i < cols; ++i)
        v[i * cols + i] = 1.0;
    if (rows == 0 || cols < 2)
        return;

    for (int sweep = 0; sweep < 64; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double* cp = m.data() + p * rows;
                double* cq = m.data() + q * rows;
                double alpha = 0.0;
                double beta = 0.0;
                double gamma = 0.0;
                for (std::size_t r = 0; r < rows; ++r) {
                    alpha += cp[r] * cp[r];
                    beta += cq[r] * cq[r];
                    gamma += cp[r] * cq[r];
                }
                if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta))
                    continue;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                double t = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                if (zeta < 0.0)
                    t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t r = 0; r < rows; ++r) {
                    const double mp = cp[r];
                    const double mq = cq[r];
                    cp[r] = c * mp - s * mq;
                    cq[r] = s * mp + c * mq;
                }
                double* vp = v.data() + p * cols;
                double* vq = v.data() + q * cols;
                for (std::size_t r = 0; r < cols; ++r) {
                    const double wp = vp[r];
                    const double wq = vq[r];
                    vp[r] = c * wp - s * wq;
                    vq[r] = s * wp + c * wq;
                }
                rotated = true;
            }
        }
        if (!rotated)
            break;
    }
}

} // namespace

HaarWeight make_haar(const GroupSpec& spec, double point_mass)
{
    if (!(point_mass > 0.0) || !std::isfinite(point_mass))
        fail(ErrorCode::InvalidArgument, "point mass must be a positive finite number");
    return HaarWeight{spec, point_mass};
}

HaarWeight normalized_haar(const GroupSpec& spec)
{
    return HaarWeight{spec, 1.0 / static_cast<double>(spec.order)};
}

HaarWeight counting_haar(const GroupSpec& spec)
{
    return HaarWeight{spec, 1.0};
}

Complex integrate(const HaarWeight& w, const GroupFunction& f)
{
    check_same_spec(w, f);
    return w.point_mass * pairwise_sum(f.values.data(), f.values.size());
}

double check_invariance(const HaarWeight& w, const GroupFunction& f, const GroupElement& a)
{
    check_same_spec(w, f);
    // Shift to g(x) = f(x + a) by plain re-indexing.
    const GroupSpec& spec = f.spec;
    GroupFunction g{spec, std::vector<Complex>(spec.order)};
    for (std::size_t k = 0; k < spec.order; ++k)
        g.values[k] = f.values[rank(spec, add(spec, unrank(spec, k), a))];
    return std::abs(integrate(w, g) - integrate(w, f));
}

UniquenessReport uniqueness_report(const GroupSpec& spec, bool all_translations)
{
    const std::size_t n = spec.order;
    if (n > kUniquenessOrderCap)
        fail(ErrorCode::SizeCapExceeded,
             "uniqueness oracle limited to order " + std::to_string(kUniquenessOrderCap));

    // Shifts to enforce invariance under. One generator per nontrivial
    // cyclic factor generates the group; the full translation set is kept
    // for cross-checking the reduction.
    std::vector<GroupElement> shifts;
    if (all_translations) {
        for (std::size_t k = 1; k < n; ++k)
            shifts.push_back(unrank(spec, k));
    } else {
        for (std::size_t j = 0; j < spec.cyclic_orders.size(); ++j) {
            if (spec.cyclic_orders[j] == 1)
                continue;
            GroupElement g = zero(spec);
            g.residues[j] = 1;
            shifts.push_back(std::move(g));
        }
    }

    // Invariance of L(f) = sum_x c_x f(x) under shift a reads c_{y-a} = c_y
    // for every y: one row of M per (shift, y) pair, +1 at rank(y-a) and -1
    // at rank(y).
    const std::size_t rows = shifts.size() * n;
    std::vector<double> m(rows * n, 0.0);
    std::size_t row = 0;
    for (const GroupElement& g : shifts) {
        const GroupElement neg = negate(spec, g);
        for (std::size_t y = 0; y < n; ++y, ++row) {
            const std::size_t src = rank(spec, add(spec, unrank(spec, y), neg));
            m[src * rows + row] += 1.0;
            m[y * rows + row] -= 1.0;
        }
    }

    std::vector<double> v;
    hestenes_svd(m, rows, n, v);

    std::vector<double> sigma(n, 0.0);
    double sigma_max = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        double norm2 = 0.0;
        for (std::size_t r = 0; r < rows; ++r)
            norm2 += m[c * rows + r] * m[c * rows + r];
        sigma[c] = std::sqrt(norm2);
        sigma_max = std::max(sigma_max, sigma[c]);
    }

    const double cutoff = 1e-10 * sigma_max;
    std::size_t rank_m = 0;
    std::size_t arg_min = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (sigma_max > 0.0 && sigma[c] > cutoff)
            ++rank_m;
        if (sigma[c] < sigma[arg_min])
            arg_min = c;
    }

    UniquenessReport report;
    report.dimension = n - rank_m;
    report.null_ray.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        report.null_ray[k] = v[arg_min * n + k];
    return report;
}

std::size_t uniqueness_oracle(const GroupSpec& spec)
{
    return uniqueness_report(spec).dimension;
}

} // namespace abharm
