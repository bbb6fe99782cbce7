#pragma once

#include <complex>

namespace bergsamp {

using Complex = std::complex<double>;

/// Points with |z| >= 1 - kBoundaryTol are rejected by disk-domain checks.
inline constexpr double kBoundaryTol = 1e-14;

struct EuclideanDisk {
    Complex center;
    double radius = 0.0;
};

/// Pseudohyperbolic disk together with its derived Euclidean form.
struct PhbDisk {
    Complex center;
    double phb_radius = 0.0;
    EuclideanDisk euclid;
};

/// rho(z, w) = |z - w| / |1 - conj(z) w|; both points strictly inside the unit disk.
double phb_distance(Complex z, Complex w);

/// The involutive disk automorphism z -> (a - z) / (1 - conj(a) z).
Complex automorphism(Complex a, Complex z);

/// d/dz of automorphism(a, .): -(1 - |a|^2) / (1 - conj(a) z)^2.
Complex automorphism_derivative(Complex a, Complex z);

/// Euclidean form of {w : rho(center, w) < r}. A general center is rotated to
/// the positive real axis, converted, and rotated back.
EuclideanDisk phb_disk_to_euclidean(Complex center, double r);

/// Radius doubling in the pseudohyperbolic metric: 2r / (1 + r^2).
double phb_double(double r);

PhbDisk make_phb_disk(Complex center, double r);

} // namespace bergsamp
