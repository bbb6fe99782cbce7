#pragma once

#include "bergsamp/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace bergsamp {

/// Annular sector rho_min <= |z| < rho_max, theta_min <= arg z < theta_max.
/// Angles in radians; width at most 2*pi; angles need not be reduced.
struct AnnularSector {
    double rho_min = 0.0;
    double rho_max = 0.0;
    double theta_min = 0.0;
    double theta_max = 0.0;
};

/// Finite union of annular sectors (overlaps allowed; measures are of the union).
struct Region {
    std::vector<AnnularSector> sectors;
    std::string label;
};

/// One radial band of the disjoint decomposition: pairwise-disjoint sorted
/// arcs within [0, 2*pi).
struct RadialBand {
    double rho_min = 0.0;
    double rho_max = 0.0;
    std::vector<std::pair<double, double>> arcs;

    double angular_width() const;
    bool contains_angle(double theta) const; // theta already in [0, 2*pi)
};

struct DensityReport {
    double r = 0.0;
    double gamma_hat = 0.0; // grid minimum, an upper bound for the true infimum
    Complex argmin_center;
    int grid_resolution = 0;
};

/// Checks sector invariants: 0 <= rho_min < rho_max <= max_rho and angular
/// width in [0, 2*pi]. Throws std::invalid_argument on violation.
void validate(const Region& region, double max_rho = 1.0);

/// Disjoint band decomposition of the union (used by all region integrals).
std::vector<RadialBand> disjoint_bands(const Region& region);

/// Normalized Lebesgue area of the union (A(unit disk) = 1).
double region_area(const Region& region);

/// Weighted area (alpha+1) * integral_E (1-|z|^2)^alpha dA, closed form per band.
double region_area(const Region& region, double alpha);

/// Normalized Lebesgue area of E intersected with the disk, by adaptive
/// angular integration of the exact per-ray radial cross-sections
/// (relative target 1e-4).
double intersect_disk_area(const Region& region, const EuclideanDisk& disk);

/// gamma_hat = min over a polar center grid (|z| <= 1 - 1e-3) of
/// |E ∩ D_phb(z, r)| / |D_phb(z, r)|.
DensityReport density(const Region& region, double r, int center_grid_resolution);

/// Named catalog: "full", "empty", "annulus(a[,b])", "annuli(eps[,n_max])",
/// "grating(m,fill)", "holes(m,rho,d)", "sector(a,b,t0,t1)", "random(count,seed)".
Region builtin_region(const std::string& name);
std::vector<std::string> builtin_region_names();

} // namespace bergsamp
