#pragma once

#include "bergsamp/geometry.hpp"

#include <cstdint>
#include <vector>

namespace bergsamp {

/// Index into the dyadic lattice z_{n,k} = (1 - 2^{-n}) e^{i 2 pi k / 2^n}.
struct LatticeIndex {
    int n = 0;
    std::int64_t k = 0;
    bool operator==(const LatticeIndex&) const = default;
};

struct CoveringReport {
    double r = 0.0;
    int measured_N = 0;      // grid maximum, hence a lower bound for the true N
    double bound_N = 0.0;    // c_ov * (1-r)^{-2} * ln(1/(1-r))
    bool covering_ok = false;
    double uncovered_fraction = 0.0;
};

Complex lattice_point(LatticeIndex idx);

/// All (n, k) with n <= n_max, lexicographic; count = 2^{n_max+1} - 1.
std::vector<LatticeIndex> lattice_indices_up_to(int n_max);

/// Distance from z to the nearest lattice point with level <= n_max.
double min_lattice_distance(Complex z, int n_max);

/// Smallest r on the grid {0.30, 0.31, ..., 0.99} such that every polar-grid
/// test point with |z| <= 1 - boundary_margin lies in some D_phb(z_{n,k}, r),
/// n <= n_max. Grid-resolution dependent by construction.
double find_covering_radius(int n_max, int grid_resolution, double boundary_margin);

/// Number of lattice disks D_phb(z_{n,k}, r), n <= n_max, containing z.
/// Exhaustive scan over all indices; reference implementation.
int overlap_count(Complex z, double r, int n_max);

/// Same count via per-level angular windows (the pseudohyperbolic distance at
/// fixed moduli is monotone in the angular difference).
int overlap_count_fast(Complex z, double r, int n_max);

/// Number of distinct levels n <= n_max with some z_{n,k} in D_phb(x, r).
int radial_level_count(Complex x, double r, int n_max);

/// Grid sweep: measured_N = max overlap count, covering/uncovered stats at
/// radius r, and the (1-r)^{-2} ln(1/(1-r)) bound scaled by c_ov.
CoveringReport overlap_constant(double r, int n_max, int grid_resolution, double c_ov = 1.0);

/// The repository's frozen reference covering radius r0
/// (find_covering_radius(8, 512, 2^{-8}), recomputed by the test suite).
double reference_covering_radius();

} // namespace bergsamp
