#include "bergsamp/covering.hpp"

#include "bergsamp/util.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace bergsamp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double level_modulus(int n) { return 1.0 - std::ldexp(1.0, -n); }

// Pseudohyperbolic distance between points of moduli x, y at angular
// difference delta is monotone increasing in |delta|; the threshold angle for
// distance r solves cos(delta*) = (x^2 + y^2 - r^2 (1 + x^2 y^2)) / (2xy(1 - r^2)).
double threshold_cos(double x, double y, double r) {
    return (x * x + y * y - r * r * (1.0 + x * x * y * y)) / (2.0 * x * y * (1.0 - r * r));
}

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

// Visits the lattice points of one level whose angular distance to phi is
// within the window that can contain distance-< r points, and counts those
// that actually are (verified with the exact metric).
int count_level(Complex z, double phi, double x, double r, int n) {
    const double y = level_modulus(n);
    const std::int64_t size = std::int64_t{1} << n;
    if (x * y == 0.0) {
        const double d = std::max(x, y);
        return d < r ? static_cast<int>(size) : 0;
    }
    const double c = threshold_cos(x, y, r);
    if (c >= 1.0) return 0;
    std::int64_t half_window;
    if (c <= -1.0) {
        half_window = size; // whole level qualifies
    } else {
        const double delta = std::acos(c);
        half_window = static_cast<std::int64_t>(std::ceil(delta / kTwoPi * size)) + 1;
    }
    const std::int64_t center = std::llround(phi / kTwoPi * size);
    if (2 * half_window + 1 >= size) {
        int count = 0;
        for (std::int64_t k = 0; k < size; ++k) {
            const double theta = kTwoPi * k / static_cast<double>(size);
            if (phb_distance(z, y * Complex(std::cos(theta), std::sin(theta))) < r) ++count;
        }
        return count;
    }
    int count = 0;
    for (std::int64_t j = center - half_window; j <= center + half_window; ++j) {
        std::int64_t k = j % size;
        if (k < 0) k += size;
        const double theta = kTwoPi * k / static_cast<double>(size);
        if (phb_distance(z, y * Complex(std::cos(theta), std::sin(theta))) < r) ++count;
    }
    return count;
}

double level_min_distance(Complex z, double phi, double x, int n) {
    const double y = level_modulus(n);
    const std::int64_t size = std::int64_t{1} << n;
    if (x * y == 0.0) return std::max(x, y);
    const std::int64_t center = std::llround(phi / kTwoPi * size);
    double best = 1.0;
    for (std::int64_t j = center - 1; j <= center + 1; ++j) {
        std::int64_t k = j % size;
        if (k < 0) k += size;
        const double theta = kTwoPi * k / static_cast<double>(size);
        best = std::min(best, phb_distance(z, y * Complex(std::cos(theta), std::sin(theta))));
    }
    return best;
}

} // namespace

Complex lattice_point(LatticeIndex idx) {
    if (idx.n < 0 || idx.k < 0 || idx.k >= (std::int64_t{1} << idx.n))
        throw std::out_of_range("lattice_point: k must lie in [0, 2^n)");
    const double rho = level_modulus(idx.n);
    const double theta = kTwoPi * idx.k / std::ldexp(1.0, idx.n);
    return rho * Complex(std::cos(theta), std::sin(theta));
}

std::vector<LatticeIndex> lattice_indices_up_to(int n_max) {
    if (n_max < 0) throw std::invalid_argument("lattice_indices_up_to: n_max >= 0 required");
    std::vector<LatticeIndex> out;
    out.reserve((std::size_t{1} << (n_max + 1)) - 1);
    for (int n = 0; n <= n_max; ++n)
        for (std::int64_t k = 0; k < (std::int64_t{1} << n); ++k) out.push_back({n, k});
    return out;
}

double min_lattice_distance(Complex z, int n_max) {
    const double x = std::abs(z);
    const double phi = wrap_angle(std::arg(z));
    double best = 1.0;
    for (int n = 0; n <= n_max; ++n) best = std::min(best, level_min_distance(z, phi, x, n));
    return best;
}

double find_covering_radius(int n_max, int grid_resolution, double boundary_margin) {
    if (grid_resolution < 64)
        throw std::invalid_argument("find_covering_radius: grid_resolution >= 64 required");
    if (!(boundary_margin > 0.0 && boundary_margin <= std::ldexp(1.0, -n_max)))
        throw std::invalid_argument("find_covering_radius: boundary_margin in (0, 2^{-n_max}] required");

    const double rho_max = 1.0 - boundary_margin;
    std::vector<double> row_max(grid_resolution, 0.0);
    parallel_for(grid_resolution, [&](std::size_t i) {
        const double rho = rho_max * static_cast<double>(i) / (grid_resolution - 1);
        double worst = 0.0;
        for (int j = 0; j < grid_resolution; ++j) {
            const double theta = kTwoPi * j / grid_resolution;
            const Complex z = rho * Complex(std::cos(theta), std::sin(theta));
            worst = std::max(worst, min_lattice_distance(z, n_max));
        }
        row_max[i] = worst;
    });
    const double d_star = *std::max_element(row_max.begin(), row_max.end());

    for (int c = 30; c <= 99; ++c) {
        const double r = c / 100.0;
        if (d_star < r) return r;
    }
    throw std::runtime_error("find_covering_radius: no radius below 1 covers; n_max too small for the margin");
}

int overlap_count(Complex z, double r, int n_max) {
    int count = 0;
    for (int n = 0; n <= n_max; ++n) {
        for (std::int64_t k = 0; k < (std::int64_t{1} << n); ++k) {
            if (phb_distance(z, lattice_point({n, k})) < r) ++count;
        }
    }
    return count;
}

int overlap_count_fast(Complex z, double r, int n_max) {
    const double x = std::abs(z);
    const double phi = wrap_angle(std::arg(z));
    int count = 0;
    for (int n = 0; n <= n_max; ++n) count += count_level(z, phi, x, r, n);
    return count;
}

int radial_level_count(Complex x, double r, int n_max) {
    const double mod = std::abs(x);
    const double phi = wrap_angle(std::arg(x));
    int count = 0;
    for (int n = 0; n <= n_max; ++n)
        if (level_min_distance(x, phi, mod, n) < r) ++count;
    return count;
}

CoveringReport overlap_constant(double r, int n_max, int grid_resolution, double c_ov) {
    if (!(r > 0.0 && r < 1.0)) throw std::domain_error("overlap_constant: r in (0,1) required");
    const double margin = std::ldexp(1.0, -n_max);
    const double rho_max = 1.0 - margin;

    struct RowStats {
        int max_count = 0;
        long uncovered = 0;
    };
    std::vector<RowStats> rows(grid_resolution);
    parallel_for(grid_resolution, [&](std::size_t i) {
        const double rho = rho_max * static_cast<double>(i) / (grid_resolution - 1);
        RowStats stats;
        for (int j = 0; j < grid_resolution; ++j) {
            const double theta = kTwoPi * j / grid_resolution;
            const Complex z = rho * Complex(std::cos(theta), std::sin(theta));
            const int count = overlap_count_fast(z, r, n_max);
            stats.max_count = std::max(stats.max_count, count);
            if (count == 0) ++stats.uncovered;
        }
        rows[i] = stats;
    });

    CoveringReport report;
    report.r = r;
    long uncovered = 0;
    for (const RowStats& s : rows) {
        report.measured_N = std::max(report.measured_N, s.max_count);
        uncovered += s.uncovered;
    }
    const double total = static_cast<double>(grid_resolution) * grid_resolution;
    report.uncovered_fraction = uncovered / total;
    report.covering_ok = (uncovered == 0);
    report.bound_N = c_ov * std::log(1.0 / (1.0 - r)) / ((1.0 - r) * (1.0 - r));
    return report;
}

double reference_covering_radius() {
    return 0.76; // find_covering_radius(8, 512, 2^{-8}); recomputed by the covering tests
}

} // namespace bergsamp
