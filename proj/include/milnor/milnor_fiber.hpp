#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "milnor/braid.hpp"

namespace milnor {

struct DegenerateConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BranchCut : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotOnFiber : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cx = std::complex<double>;

/// Configuration of distinct points in C; tolerance governs the fiber
/// checks and the distinctness requirement (pairwise distances must
/// exceed 10x tolerance).
struct Config {
    std::vector<Cx> points;
    double tolerance = 1e-9;

    int n() const { return static_cast<int>(points.size()); }

    void check_distinct() const {
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (std::abs(points[i] - points[j]) <= 10 * tolerance)
                    throw DegenerateConfig("points " + std::to_string(i) + " and " +
                                           std::to_string(j) + " too close");
    }
};

/// q_n(x) = prod_{i<j} (x_i - x_j).
inline Cx q_n(const Config& c) {
    c.check_distinct();
    Cx q(1.0, 0.0);
    for (std::size_t i = 0; i < c.points.size(); ++i)
        for (std::size_t j = i + 1; j < c.points.size(); ++j) q *= c.points[i] - c.points[j];
    return q;
}

/// |q_n(x) - 1|.
inline double defect(const Config& c) { return std::abs(q_n(c) - Cx(1.0, 0.0)); }

inline bool on_negative_real_axis(Cx z) { return z.imag() == 0.0 && z.real() <= 0.0; }

/// Principal k-th root with branch cut along the negative real axis.
inline Cx principal_root(Cx z, int k) {
    if (on_negative_real_axis(z)) throw BranchCut("root argument on the negative real axis");
    return std::polar(std::pow(std::abs(z), 1.0 / k), std::arg(z) / k);
}

/// Scales the configuration by the principal binom(n,2)-th root of q_n,
/// landing on the fiber q_n = 1.
inline Config project_to_fiber(const Config& c) {
    Cx q = q_n(c);
    int pairs = c.n() * (c.n() - 1) / 2;
    if (pairs == 0) throw DegenerateConfig("need at least two points");
    Cx root = principal_root(q, pairs);
    Config out = c;
    for (Cx& x : out.points) x /= root;
    return out;
}

/// The explicit stabilization F_n -> F_{n+1}: append
/// x_{n+1} = 1 + sum re(x_i) + cot(pi/n) sum im(x_i) and rescale by the
/// principal binom(n+1,2)-th root of a = prod_i (x_i - x_{n+1}).
/// cot is used so that n = 2 evaluates to exactly 0.
inline Config gadish_stabilize(const Config& c) {
    int n = c.n();
    if (n < 2) throw DegenerateConfig("stabilization needs n >= 2");
    if (defect(c) > c.tolerance) throw NotOnFiber("input does not satisfy the fiber equation");

    double sum_re = 0.0, sum_im = 0.0;
    for (Cx x : c.points) {
        sum_re += x.real();
        sum_im += x.imag();
    }
    double cot = (n == 2) ? 0.0 : std::cos(std::numbers::pi / n) / std::sin(std::numbers::pi / n);
    Cx next(1.0 + sum_re + sum_im * cot, 0.0);

    Cx a(1.0, 0.0);
    for (Cx x : c.points) a *= x - next;
    if (on_negative_real_axis(a)) throw BranchCut("auxiliary product on the negative real axis");

    Cx root = principal_root(a, (n + 1) * n / 2);
    Config out;
    out.tolerance = c.tolerance;
    out.points.reserve(n + 1);
    for (Cx x : c.points) out.points.push_back(x / root);
    out.points.push_back(next / root);
    return out;
}

/// The action of (sigma, d): permute coordinates by sigma and multiply by
/// the n(n-1)-th root of unity to the d-th power. Preserves the fiber
/// equation by the parity invariant.
inline Config shat_action(const Config& c, const ShatElement& g) {
    if (g.n != c.n()) throw std::invalid_argument("group element size mismatch");
    if (defect(c) > c.tolerance) throw NotOnFiber("input does not satisfy the fiber equation");
    int order = g.n * (g.n - 1);
    double angle = 2.0 * std::numbers::pi * static_cast<double>(g.d) / order;
    Cx zeta = std::polar(1.0, angle);
    Config out;
    out.tolerance = c.tolerance;
    out.points.resize(c.points.size());
    for (int i = 0; i < g.n; ++i) out.points[i] = zeta * c.points[g.perm(i)];
    return out;
}

/// Deterministic uniform double in [0, 1) from a 64-bit generator.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform point in the disk of the given radius.
inline Cx random_disk_point(std::mt19937_64& rng, double radius) {
    double r = radius * std::sqrt(uniform_unit(rng));
    double theta = 2.0 * std::numbers::pi * uniform_unit(rng);
    return std::polar(r, theta);
}

struct StabilizeStats {
    int n = 0;
    int samples = 0;
    int rejected = 0;  // degenerate draws or branch-cut hits, redrawn
    double max_defect = 0.0;
    double mean_defect = 0.0;
};

/// Monte Carlo harness: draw configurations in a disk, project to the
/// fiber, stabilize, and measure |q_{n+1} - 1|.
inline StabilizeStats stabilize_trials(int n, int samples, std::uint64_t seed,
                                       double tolerance = 1e-9) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL);
    StabilizeStats stats;
    stats.n = n;
    stats.samples = samples;
    double total = 0.0;
    for (int s = 0; s < samples; ++s) {
        for (;;) {
            Config c;
            c.tolerance = tolerance;
            c.points.reserve(n);
            for (int i = 0; i < n; ++i) c.points.push_back(random_disk_point(rng, 1.0));
            try {
                Config fiber = project_to_fiber(c);
                Config next = gadish_stabilize(fiber);
                double d = defect(next);
                total += d;
                stats.max_defect = std::max(stats.max_defect, d);
                break;
            } catch (const DegenerateConfig&) {
                ++stats.rejected;
            } catch (const BranchCut&) {
                ++stats.rejected;
            }
        }
    }
    stats.mean_defect = samples > 0 ? total / samples : 0.0;
    return stats;
}

} // namespace milnor
